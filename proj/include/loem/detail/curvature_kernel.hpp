#pragma once

#include <vector>

namespace loem::detail {

// Scalar-generic kernels for the normalized scalar curvature of a
// lower-triangular frame and its analytic first derivatives. Matrices are
// dense row-major n*n with zeros above the diagonal; n stays tiny, so the
// O(n^4) contractions below are cheap.
//
// Notation: a is the frame, beta its inverse, and
//   w[i][j][k] = sum_l a_il a_jl beta_lk
// the bracket-projection term whose square enters the curvature. For
// triangular a, w[i][j][k] vanishes for k > min(i,j).

template <typename T>
void build_lower(int n, const T* x, const T* u, std::vector<T>& a) {
    a.assign(static_cast<size_t>(n) * n, T(0.0));
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            a[i * n + j] = u[k++] * x[j];
        }
        a[i * n + i] = x[i];
    }
}

template <typename T>
void lower_inverse(int n, const std::vector<T>& a, std::vector<T>& beta) {
    beta.assign(static_cast<size_t>(n) * n, T(0.0));
    for (int j = 0; j < n; ++j) {
        beta[j * n + j] = T(1.0) / a[j * n + j];
        for (int i = j + 1; i < n; ++i) {
            T s(0.0);
            for (int l = j; l < i; ++l) {
                s += a[i * n + l] * beta[l * n + j];
            }
            beta[i * n + j] = -s / a[i * n + i];
        }
    }
}

template <typename T>
void bracket_tensor(int n, const std::vector<T>& a, const std::vector<T>& beta,
                    std::vector<T>& w) {
    w.assign(static_cast<size_t>(n) * n * n, T(0.0));
    for (int k = 0; k < n; ++k) {
        for (int i = k; i < n; ++i) {
            for (int j = k; j < n; ++j) {
                const int m = i < j ? i : j;
                T s(0.0);
                for (int l = k; l <= m; ++l) {
                    s += a[i * n + l] * a[j * n + l] * beta[l * n + k];
                }
                w[(i * n + j) * n + k] = s;
            }
        }
    }
}

// S = sum_i a_ii^2 - sum_{k < min(i,j)} w[i][j][k]^2 (triangular form).
template <typename T>
T stilde_lower(int n, const std::vector<T>& a, const std::vector<T>& w) {
    T s(0.0);
    for (int i = 0; i < n; ++i) {
        s += a[i * n + i] * a[i * n + i];
    }
    for (int k = 0; k < n; ++k) {
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                const T& wv = w[(i * n + j) * n + k];
                s -= wv * wv;
            }
        }
    }
    return s;
}

// d(stilde)/d(a_pq) over the lower triangle, using the exact inverse-matrix
// sensitivity d(beta) = -beta dA beta. Derived from the general form
// stilde = 2 sum a^2 - sum w^2:
//   d/da_pq sum w^2 = 2 ( 2 sum_{j,k} w[p][j][k] a_jq beta_qk
//                         - sum_k beta_qk c[k][p] ),
//   c[k][p] = sum_{i,j} w[i][j][k] w[i][j][p].
template <typename T>
void stilde_grad_entries(int n, const std::vector<T>& a, const std::vector<T>& beta,
                         const std::vector<T>& w, std::vector<T>& grad) {
    grad.assign(static_cast<size_t>(n) * n, T(0.0));

    std::vector<T> c(static_cast<size_t>(n) * n, T(0.0));
    for (int k = 0; k < n; ++k) {
        for (int p = 0; p < n; ++p) {
            const int lo = k > p ? k : p;
            T s(0.0);
            for (int i = lo; i < n; ++i) {
                for (int j = lo; j < n; ++j) {
                    s += w[(i * n + j) * n + k] * w[(i * n + j) * n + p];
                }
            }
            c[k * n + p] = s;
        }
    }

    for (int p = 0; p < n; ++p) {
        for (int q = 0; q <= p; ++q) {
            T t1(0.0);
            for (int j = q; j < n; ++j) {
                const int m = p < j ? p : j;
                for (int k = 0; k <= (m < q ? m : q); ++k) {
                    t1 += w[(p * n + j) * n + k] * a[j * n + q] * beta[q * n + k];
                }
            }
            T t2(0.0);
            for (int k = 0; k <= q; ++k) {
                t2 += beta[q * n + k] * c[k * n + p];
            }
            grad[p * n + q] = T(4.0) * a[p * n + q] - T(2.0) * (T(2.0) * t1 - t2);
        }
    }
}

template <typename T>
T stilde_from_lower(int n, const std::vector<T>& a) {
    std::vector<T> beta, w;
    lower_inverse(n, a, beta);
    bracket_tensor(n, a, beta, w);
    return stilde_lower(n, a, w);
}

// Gradient in ratio coordinates: a_ii = x_i, a_ij = u_ij x_j.
template <typename T>
void ratio_gradient(int n, const T* x, const T* u, T* gx, T* gu) {
    std::vector<T> a, beta, w, grad;
    build_lower(n, x, u, a);
    lower_inverse(n, a, beta);
    bracket_tensor(n, a, beta, w);
    stilde_grad_entries(n, a, beta, w, grad);

    for (int q = 0; q < n; ++q) {
        gx[q] = grad[q * n + q];
    }
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            gu[k] = x[j] * grad[i * n + j];
            gx[j] += u[k] * grad[i * n + j];
            ++k;
        }
    }
}

// Lagrange residual: r_i = x_i dS/dx_i - lambda, then r_ij = dS/du_ij.
template <typename T>
void residual_kernel(int n, const T* x, const T* u, T lambda, T* r) {
    const int m = n * (n - 1) / 2;
    std::vector<T> gx(n), gu(m);
    ratio_gradient(n, x, u, gx.data(), gu.data());
    for (int i = 0; i < n; ++i) {
        r[i] = x[i] * gx[i] - lambda;
    }
    for (int k = 0; k < m; ++k) {
        r[n + k] = gu[k];
    }
}

}  // namespace loem::detail
