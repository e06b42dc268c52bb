#include "smelter/kernels/kernels.hpp"

#include <cmath>

namespace smelter::kernels {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

inline double gelu_one(double x) {
    return 0.5 * x * (1.0 + std::erf(x * kInvSqrt2));
}

// d/dx [x * Phi(x)] = Phi(x) + x * phi(x), with the exact erf form.
inline double gelu_grad_one(double x) {
    double cdf = 0.5 * (1.0 + std::erf(x * kInvSqrt2));
    double pdf = kInvSqrt2Pi * std::exp(-0.5 * x * x);
    return cdf + x * pdf;
}

}  // namespace

namespace reference {

void matmul_nn(const double* a, const double* b, double* c, int m, int n, int k) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
            c[i * n + j] = acc;
        }
    }
}

void matmul_nt(const double* a, const double* b, double* c, int m, int n, int k) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[i * k + p] * b[j * k + p];
            c[i * n + j] = acc;
        }
    }
}

void matmul_tn_acc(const double* a, const double* b, double* c, int m, int n, int k) {
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < m; ++p) acc += a[p * k + i] * b[p * n + j];
            c[i * n + j] += acc;
        }
    }
}

void add_bias(double* x, const double* bias, int rows, int cols) {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) x[i * cols + j] += bias[j];
}

void gelu(const double* x, double* y, int n) {
    for (int i = 0; i < n; ++i) y[i] = gelu_one(x[i]);
}

void gelu_backward(const double* x, const double* dy, double* dx, int n) {
    for (int i = 0; i < n; ++i) dx[i] = dy[i] * gelu_grad_one(x[i]);
}

void relu(const double* x, double* y, int n) {
    for (int i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward(const double* x, const double* dy, double* dx, int n) {
    for (int i = 0; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

}  // namespace reference

void matmul_nn(const double* a, const double* b, double* c, int m, int n, int k) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
            c[i * n + j] = acc;
        }
    }
}

void matmul_nt(const double* a, const double* b, double* c, int m, int n, int k) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[i * k + p] * b[j * k + p];
            c[i * n + j] = acc;
        }
    }
}

void matmul_tn_acc(const double* a, const double* b, double* c, int m, int n, int k) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < m; ++p) acc += a[p * k + i] * b[p * n + j];
            c[i * n + j] += acc;
        }
    }
}

void add_bias(double* x, const double* bias, int rows, int cols) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) x[i * cols + j] += bias[j];
}

void gelu(const double* x, double* y, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) y[i] = gelu_one(x[i]);
}

void gelu_backward(const double* x, const double* dy, double* dx, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) dx[i] = dy[i] * gelu_grad_one(x[i]);
}

void relu(const double* x, double* y, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward(const double* x, const double* dy, double* dx, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

}  // namespace smelter::kernels
