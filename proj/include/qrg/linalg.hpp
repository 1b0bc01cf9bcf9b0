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

#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace qrg {

// Small dense row-major real square matrix.
class RealMatrix {
   public:
    RealMatrix() = default;
    explicit RealMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static RealMatrix identity(std::size_t n) {
        RealMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    double &operator()(std::size_t i, std::size_t j) {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }

    std::span<const double> data() const noexcept { return data_; }

    RealMatrix &operator+=(const RealMatrix &o) {
        assert(o.n_ == n_);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }

    RealMatrix &operator*=(double s) {
        for (double &v : data_) {
            v *= s;
        }
        return *this;
    }

    std::vector<double> apply(std::span<const double> v) const {
        assert(v.size() == n_);
        std::vector<double> out(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                out[i] += (*this)(i, j) * v[j];
            }
        }
        return out;
    }

    friend bool operator==(const RealMatrix &, const RealMatrix &) = default;

   private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Kronecker product.
inline RealMatrix kron(const RealMatrix &a, const RealMatrix &b) {
    std::size_t n = a.size() * b.size();
    RealMatrix out(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            for (std::size_t k = 0; k < b.size(); ++k) {
                for (std::size_t l = 0; l < b.size(); ++l) {
                    out(i * b.size() + k, j * b.size() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

}  // namespace qrg
