#pragma once

#include <cstddef>

// Dense kernels backing the transformer. The OpenMP variants split work
// across output rows only; every output element is produced by a single
// thread running the same inner loop as the serial reference, so the two
// are bit-identical and results do not depend on the thread count.
//
// Layout convention: row-major. Weights are stored out_features x
// in_features, i.e. y = W x is matmul_nt(x[M,K], W[N,K]) -> y[M,N].

namespace smelter::kernels {

namespace reference {

// c[M,N] = a[M,K] * b[K,N]
void matmul_nn(const double* a, const double* b, double* c, int m, int n, int k);
// c[M,N] = a[M,K] * b[N,K]^T
void matmul_nt(const double* a, const double* b, double* c, int m, int n, int k);
// c[K,N] += a[M,K]^T * b[M,N]   (accumulating; used for weight gradients)
void matmul_tn_acc(const double* a, const double* b, double* c, int m, int n, int k);

void add_bias(double* x, const double* bias, int rows, int cols);
void gelu(const double* x, double* y, int n);
void gelu_backward(const double* x, const double* dy, double* dx, int n);
void relu(const double* x, double* y, int n);
void relu_backward(const double* x, const double* dy, double* dx, int n);

}  // namespace reference

void matmul_nn(const double* a, const double* b, double* c, int m, int n, int k);
void matmul_nt(const double* a, const double* b, double* c, int m, int n, int k);
void matmul_tn_acc(const double* a, const double* b, double* c, int m, int n, int k);

void add_bias(double* x, const double* bias, int rows, int cols);
void gelu(const double* x, double* y, int n);
void gelu_backward(const double* x, const double* dy, double* dx, int n);
void relu(const double* x, double* y, int n);
void relu_backward(const double* x, const double* dy, double* dx, int n);

}  // namespace smelter::kernels
