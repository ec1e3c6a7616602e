// Copyright 2026 The qparadox Authors
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

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qparadox/errors.hpp"

namespace qparadox {

/// An exact complex number (re + im*i) / 2^exp with integer re, im.
///
/// Always normalized: exp >= 0, and when exp > 0 at least one of re, im is
/// odd. Zero is (0, 0, 0). Overflow of the 64-bit numerators throws
/// std::overflow_error instead of wrapping.
class DyadicGaussian {
   public:
    constexpr DyadicGaussian() = default;
    constexpr DyadicGaussian(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    DyadicGaussian(std::int64_t re, std::int64_t im, int exp) : re_(re), im_(im), exp_(exp) {
        if (exp < 0) {
            re_ = shl(re_, -exp);
            im_ = shl(im_, -exp);
            exp_ = 0;
        }
        normalize();
    }

    static DyadicGaussian i() {
        return DyadicGaussian(0, 1, 0);
    }

    /// i^k for any integer k.
    static DyadicGaussian i_pow(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return DyadicGaussian(1);
            case 1: return DyadicGaussian(0, 1, 0);
            case 2: return DyadicGaussian(-1);
            default: return DyadicGaussian(0, -1, 0);
        }
    }

    std::int64_t re_numerator() const {
        return re_;
    }
    std::int64_t im_numerator() const {
        return im_;
    }
    int exponent() const {
        return exp_;
    }

    bool is_zero() const {
        return re_ == 0 && im_ == 0;
    }
    bool is_real() const {
        return im_ == 0;
    }

    /// Exact value as a positive power of two, if it is one (2^k for k >= 0
    /// or 1/2^k).
    std::optional<int> log2_if_power_of_two() const {
        if (im_ != 0 || re_ <= 0 || (re_ & (re_ - 1)) != 0) {
            return std::nullopt;
        }
        int k = 0;
        for (std::int64_t v = re_; v > 1; v >>= 1) {
            k++;
        }
        return k - exp_;
    }

    DyadicGaussian conj() const {
        DyadicGaussian r = *this;
        r.im_ = -im_;
        return r;
    }

    DyadicGaussian operator-() const {
        DyadicGaussian r = *this;
        r.re_ = neg(re_);
        r.im_ = neg(im_);
        return r;
    }

    /// Multiplies by 2^k (k may be negative).
    DyadicGaussian scaled_pow2(int k) const {
        if (k >= 0) {
            int take = std::min(k, exp_);
            DyadicGaussian r = *this;
            r.exp_ -= take;
            r.re_ = shl(r.re_, k - take);
            r.im_ = shl(r.im_, k - take);
            r.normalize();
            return r;
        }
        DyadicGaussian r = *this;
        r.exp_ += -k;
        r.normalize();
        return r;
    }

    DyadicGaussian &operator+=(const DyadicGaussian &rhs) {
        int e = std::max(exp_, rhs.exp_);
        std::int64_t a = shl(re_, e - exp_), b = shl(im_, e - exp_);
        std::int64_t c = shl(rhs.re_, e - rhs.exp_), d = shl(rhs.im_, e - rhs.exp_);
        re_ = add(a, c);
        im_ = add(b, d);
        exp_ = e;
        normalize();
        return *this;
    }

    DyadicGaussian &operator-=(const DyadicGaussian &rhs) {
        return *this += -rhs;
    }

    DyadicGaussian &operator*=(const DyadicGaussian &rhs) {
        std::int64_t re = sub(mul(re_, rhs.re_), mul(im_, rhs.im_));
        std::int64_t im = add(mul(re_, rhs.im_), mul(im_, rhs.re_));
        re_ = re;
        im_ = im;
        exp_ += rhs.exp_;
        normalize();
        return *this;
    }

    friend DyadicGaussian operator+(DyadicGaussian a, const DyadicGaussian &b) {
        return a += b;
    }
    friend DyadicGaussian operator-(DyadicGaussian a, const DyadicGaussian &b) {
        return a -= b;
    }
    friend DyadicGaussian operator*(DyadicGaussian a, const DyadicGaussian &b) {
        return a *= b;
    }

    bool operator==(const DyadicGaussian &) const = default;

    std::complex<double> to_complex() const {
        double s = 1.0;
        for (int k = 0; k < exp_; k++) {
            s *= 0.5;
        }
        return {static_cast<double>(re_) * s, static_cast<double>(im_) * s};
    }

    /// Interchange syntax `a/2^k + b/2^k i`.
    std::string str() const {
        std::string k = std::to_string(exp_);
        return std::to_string(re_) + "/2^" + k + " + " + std::to_string(im_) + "/2^" + k + " i";
    }

    /// Inverse of str(). Whitespace around tokens is optional.
    static DyadicGaussian parse(std::string_view text) {
        auto fail = [&]() -> DyadicGaussian {
            throw ParseError("bad amplitude text: '" + std::string(text) + "'");
        };
        std::size_t pos = 0;
        auto skip_ws = [&]() {
            while (pos < text.size() && text[pos] == ' ') {
                pos++;
            }
        };
        auto read_int = [&](std::int64_t &out) -> bool {
            skip_ws();
            const char *first = text.data() + pos;
            const char *last = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(first, last, out);
            if (ec != std::errc() || ptr == first) {
                return false;
            }
            pos += static_cast<std::size_t>(ptr - first);
            return true;
        };
        auto expect = [&](std::string_view tok) -> bool {
            skip_ws();
            if (text.substr(pos, tok.size()) != tok) {
                return false;
            }
            pos += tok.size();
            return true;
        };
        std::int64_t a, k1, b, k2;
        if (!read_int(a) || !expect("/2^") || !read_int(k1) || !expect("+") || !read_int(b) || !expect("/2^") ||
            !read_int(k2) || !expect("i")) {
            return fail();
        }
        skip_ws();
        if (pos != text.size() || k1 != k2 || k1 < 0 || k1 > 62) {
            return fail();
        }
        return DyadicGaussian(a, b, static_cast<int>(k1));
    }

   private:
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) {
            throw std::overflow_error("dyadic numerator overflow");
        }
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) {
            throw std::overflow_error("dyadic numerator overflow");
        }
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) {
            throw std::overflow_error("dyadic numerator overflow");
        }
        return r;
    }
    static std::int64_t neg(std::int64_t a) {
        return sub(0, a);
    }
    static std::int64_t shl(std::int64_t a, int k) {
        if (k >= 63) {
            if (a == 0) {
                return 0;
            }
            throw std::overflow_error("dyadic numerator overflow");
        }
        return mul(a, std::int64_t{1} << k);
    }

    void normalize() {
        if (re_ == 0 && im_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (re_ & 1) == 0 && (im_ & 1) == 0) {
            re_ /= 2;
            im_ /= 2;
            exp_--;
        }
    }

    std::int64_t re_ = 0;
    std::int64_t im_ = 0;
    int exp_ = 0;
};

inline std::ostream &operator<<(std::ostream &out, const DyadicGaussian &v) {
    return out << v.str();
}

}  // namespace qparadox
