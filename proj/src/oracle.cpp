// Copyright 2026 The qrgcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qrg/errors.hpp"

namespace qrg::oracle {

namespace {

using Matrix2c = std::array<std::array<cdouble, 2>, 2>;
using Vec3 = std::array<double, 3>;

constexpr double kPi = std::numbers::pi;

double xlog2x(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

// Eigenvalues of a 2x2 Hermitian matrix, larger first.
std::array<double, 2> hermitian2_eigenvalues(const Matrix2c &m) {
    double a = m[0][0].real();
    double d = m[1][1].real();
    double mean = 0.5 * (a + d);
    double radius = std::hypot(0.5 * (a - d), std::abs(m[0][1]));
    return {mean + radius, mean - radius};
}

double entropy2(const Matrix2c &m) {
    auto ev = hermitian2_eigenvalues(m);
    return -xlog2x(std::max(ev[0], 0.0)) - xlog2x(std::max(ev[1], 0.0));
}

Vec3 unit_vector(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::array<Matrix2c, 3> paulis() {
    using namespace std::complex_literals;
    Matrix2c sx{{{0.0, 1.0}, {1.0, 0.0}}};
    Matrix2c sy{{{0.0, -1i}, {1i, 0.0}}};
    Matrix2c sz{{{1.0, 0.0}, {0.0, -1.0}}};
    return {sx, sy, sz};
}

Matrix2c spin_along(const Vec3 &n) {
    auto s = paulis();
    Matrix2c out{};
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                out[i][j] += n[k] * s[k][i][j];
            }
        }
    }
    return out;
}

Matrix2c projector(const Vec3 &n, double sign) {
    Matrix2c p = spin_along(n);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            p[i][j] *= 0.5 * sign;
        }
        p[i][i] += 0.5;
    }
    return p;
}

// Unnormalized Tr_measured[(P on measured side) rho].
Matrix2c conditional_state(const Matrix4c &rho, const Matrix2c &p, Side measured) {
    Matrix2c out{};
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            cdouble acc = 0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    if (measured == Side::A) {
                        acc += p[i][j] * rho[2 * j + k][2 * i + l];
                    } else {
                        acc += p[i][j] * rho[2 * k + j][2 * l + i];
                    }
                }
            }
            out[k][l] = acc;
        }
    }
    return out;
}

Matrix2c reduced(const Matrix4c &rho, Side keep) {
    Matrix2c out{};
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                out[k][l] += keep == Side::A ? rho[2 * k + m][2 * l + m] : rho[2 * m + k][2 * m + l];
            }
        }
    }
    return out;
}

double average_conditional_entropy(const Matrix4c &rho, Side side, double theta, double phi) {
    Vec3 n = unit_vector(theta, phi);
    double total = 0;
    for (double sign : {1.0, -1.0}) {
        Matrix2c cond = conditional_state(rho, projector(n, sign), side);
        double p = cond[0][0].real() + cond[1][1].real();
        if (p <= 1e-15) {
            continue;
        }
        for (auto &row : cond) {
            for (auto &v : row) {
                v /= p;
            }
        }
        total += p * entropy2(cond);
    }
    return total;
}

MeasurementDirection normalize(double theta, double phi) {
    theta = std::fmod(theta, 2 * kPi);
    if (theta < 0) {
        theta += 2 * kPi;
    }
    if (theta > kPi) {
        theta = 2 * kPi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, 2 * kPi);
    if (phi < 0) {
        phi += 2 * kPi;
    }
    return {theta, phi};
}

void check_grid(const SearchGrid &g) {
    if (g.coarse < 2 || g.refine_iters < 0) {
        throw Error(ErrorKind::DomainError, "search grid needs coarse >= 2 and refine_iters >= 0");
    }
}

constexpr int kRefinePoints = 11;

RealMatrix real_part(const Matrix4c &m) {
    RealMatrix out(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) = m[i][j].real();
        }
    }
    return out;
}

Matrix4c kron2(const Matrix2c &a, const Matrix2c &b) {
    Matrix4c out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

double trace_product(const Matrix4c &rho, const Matrix4c &op) {
    cdouble acc = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            acc += rho[i][j] * op[j][i];
        }
    }
    return acc.real();
}

Vec3 transpose_apply(const std::array<Vec3, 3> &t, const Vec3 &a) {
    Vec3 out{};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            out[j] += t[i][j] * a[i];
        }
    }
    return out;
}

double norm3(const Vec3 &v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double chsh_objective(const Vec3 &u, const Vec3 &v) {
    return norm3({u[0] + v[0], u[1] + v[1], u[2] + v[2]}) + norm3({u[0] - v[0], u[1] - v[1], u[2] - v[2]});
}

MeasurementDirection direction_of(const Vec3 &v) {
    double n = norm3(v);
    if (n < 1e-300) {
        return {0, 0};
    }
    return normalize(std::acos(std::clamp(v[2] / n, -1.0, 1.0)), std::atan2(v[1], v[0]));
}

}  // namespace

EigenDecomposition diag_symmetric(const RealMatrix &m, double sym_tol) {
    const std::size_t n = m.size();
    double frob = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > sym_tol) {
                std::ostringstream msg;
                msg << "asymmetry " << std::abs(m(i, j) - m(j, i)) << " at (" << i << "," << j << ")";
                throw Error(ErrorKind::NotSymmetric, msg.str());
            }
            frob += m(i, j) * m(i, j);
        }
    }
    RealMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + m(j, i));
        }
    }
    RealMatrix v = RealMatrix::identity(n);
    const double threshold = 1e-12 * std::max(1.0, std::sqrt(frob));

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    s += a(i, j) * a(i, j);
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                // A <- J^T A J with the rotation acting on rows/columns p, q.
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    EigenDecomposition out{std::vector<double>(n), RealMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

Matrix4c partial_trace_mid(const BlockState8 &ket) {
    Matrix4c out{};
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s3 = 0; s3 < 2; ++s3) {
            for (int t1 = 0; t1 < 2; ++t1) {
                for (int t3 = 0; t3 < 2; ++t3) {
                    double acc = 0;
                    for (int mid = 0; mid < 2; ++mid) {
                        acc += ket[4 * s1 + 2 * mid + s3] * ket[4 * t1 + 2 * mid + t3];
                    }
                    out[2 * s1 + s3][2 * t1 + t3] = acc;
                }
            }
        }
    }
    return out;
}

double entropy_bits(const RealMatrix &rho) {
    double s = 0;
    for (double ev : diag_symmetric(rho).values) {
        s -= xlog2x(std::max(ev, 0.0));
    }
    return s;
}

std::array<std::array<double, 3>, 3> correlation_tensor(const Matrix4c &rho) {
    auto s = paulis();
    std::array<std::array<double, 3>, 3> t{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t[i][j] = trace_product(rho, kron2(s[i], s[j]));
        }
    }
    return t;
}

DiscordSearch brute_force_discord(const XState &s, Side side, SearchGrid grid) {
    check_grid(grid);
    const Matrix4c rho = s.matrix();

    auto objective = [&](double theta, double phi) { return average_conditional_entropy(rho, side, theta, phi); };

    // Antipodal directions give the same measurement, so a hemisphere suffices.
    const int n_theta = grid.coarse;
    const int n_phi = 2 * grid.coarse;
    double h_theta = (kPi / 2) / (n_theta - 1);
    double h_phi = 2 * kPi / n_phi;
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0;
    double best_phi = 0;
    for (int i = 0; i < n_theta; ++i) {
        for (int j = 0; j < n_phi; ++j) {
            double th = h_theta * i;
            double ph = h_phi * j;
            double v = objective(th, ph);
            if (v < best) {
                best = v;
                best_theta = th;
                best_phi = ph;
            }
        }
    }

    for (int it = 0; it < grid.refine_iters; ++it) {
        double c_theta = best_theta;
        double c_phi = best_phi;
        for (int i = 0; i < kRefinePoints; ++i) {
            for (int j = 0; j < kRefinePoints; ++j) {
                double th = c_theta + h_theta * (2.0 * i / (kRefinePoints - 1) - 1);
                double ph = c_phi + h_phi * (2.0 * j / (kRefinePoints - 1) - 1);
                double v = objective(th, ph);
                if (v < best) {
                    best = v;
                    best_theta = th;
                    best_phi = ph;
                }
            }
        }
        h_theta /= 10;
        h_phi /= 10;
    }

    double s_side = entropy2(reduced(rho, side));
    double s_total = entropy_bits(real_part(rho));
    return {s_side - s_total + best, best, normalize(best_theta, best_phi)};
}

ChshSearch brute_force_chsh(const XState &s, SearchGrid grid) {
    check_grid(grid);
    const Matrix4c rho = s.matrix();
    const auto t = correlation_tensor(rho);

    // Tr(rho B) = (T^T a).(b + b') + (T^T a').(b - b'); for fixed a, a' the
    // best b, b' are along u + v and u - v, giving |u + v| + |u - v|.
    const int n_theta = grid.coarse;
    const int n_phi = 2 * grid.coarse;
    double h_theta = (kPi / 2) / (n_theta - 1);
    double h_phi = 2 * kPi / n_phi;

    std::vector<std::array<double, 2>> angles;
    std::vector<Vec3> images;
    for (int i = 0; i < n_theta; ++i) {
        for (int j = 0; j < n_phi; ++j) {
            angles.push_back({h_theta * i, h_phi * j});
            images.push_back(transpose_apply(t, unit_vector(h_theta * i, h_phi * j)));
        }
    }
    double best = -1;
    std::array<double, 4> arg{};
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = 0; j < images.size(); ++j) {
            double v = chsh_objective(images[i], images[j]);
            if (v > best) {
                best = v;
                arg = {angles[i][0], angles[i][1], angles[j][0], angles[j][1]};
            }
        }
    }

    std::array<double, 4> h{h_theta, h_phi, h_theta, h_phi};
    for (int it = 0; it < grid.refine_iters; ++it) {
        const auto center = arg;
        std::array<std::vector<Vec3>, 2> local;
        std::array<std::vector<std::array<double, 2>>, 2> local_angles;
        for (int side = 0; side < 2; ++side) {
            for (int i = 0; i < kRefinePoints; ++i) {
                for (int j = 0; j < kRefinePoints; ++j) {
                    double th = center[2 * side] + h[2 * side] * (2.0 * i / (kRefinePoints - 1) - 1);
                    double ph = center[2 * side + 1] + h[2 * side + 1] * (2.0 * j / (kRefinePoints - 1) - 1);
                    local[side].push_back(transpose_apply(t, unit_vector(th, ph)));
                    local_angles[side].push_back({th, ph});
                }
            }
        }
        for (std::size_t i = 0; i < local[0].size(); ++i) {
            for (std::size_t j = 0; j < local[1].size(); ++j) {
                double v = chsh_objective(local[0][i], local[1][j]);
                if (v > best) {
                    best = v;
                    arg = {local_angles[0][i][0], local_angles[0][i][1], local_angles[1][j][0], local_angles[1][j][1]};
                }
            }
        }
        for (double &x : h) {
            x /= 10;
        }
    }

    Vec3 a = unit_vector(arg[0], arg[1]);
    Vec3 a2 = unit_vector(arg[2], arg[3]);
    Vec3 u = transpose_apply(t, a);
    Vec3 v = transpose_apply(t, a2);
    Vec3 b{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
    Vec3 b2{u[0] - v[0], u[1] - v[1], u[2] - v[2]};
    auto unit_or_z = [](Vec3 w) {
        double n = norm3(w);
        return n < 1e-300 ? Vec3{0, 0, 1} : Vec3{w[0] / n, w[1] / n, w[2] / n};
    };
    b = unit_or_z(b);
    b2 = unit_or_z(b2);

    Matrix2c sa = spin_along(a);
    Matrix2c sa2 = spin_along(a2);
    Matrix2c sum = spin_along({b[0] + b2[0], b[1] + b2[1], b[2] + b2[2]});
    Matrix2c diff = spin_along({b[0] - b2[0], b[1] - b2[1], b[2] - b2[2]});
    Matrix4c bell = kron2(sa, sum);
    Matrix4c second = kron2(sa2, diff);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            bell[i][j] += second[i][j];
        }
    }
    return {trace_product(rho, bell), {direction_of(a), direction_of(a2), direction_of(b), direction_of(b2)}};
}

}  // namespace qrg::oracle
