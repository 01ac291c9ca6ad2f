#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evo/errors.hpp"
#include "evo/rng.hpp"

namespace evo {

/// Fixed-length packed bit vector; the genotype type for every problem.
/// Bit i of a length-n string corresponds to decision variable i; tail bits
/// of the last word are kept zero so word-level kernels need no masking.
class BitString {
public:
    BitString() = default;

    /// All-zeros string of length n.
    explicit BitString(std::size_t n) : n_(n), words_(word_count(n), 0) {}

    static BitString zeros(std::size_t n) { return BitString(n); }

    static BitString ones(std::size_t n) {
        BitString b(n);
        for (auto& w : b.words_) {
            w = ~0ULL;
        }
        b.mask_tail();
        return b;
    }

    /// Uniform random string.
    static BitString random(std::size_t n, Rng& rng) {
        BitString b(n);
        for (auto& w : b.words_) {
            w = rng();
        }
        b.mask_tail();
        return b;
    }

    /// Parse "0101..."; character i becomes bit i.
    static BitString from_string(std::string_view s) {
        BitString b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                b.set(i, true);
            } else if (s[i] != '0') {
                throw Error("BitString::from_string: expected only '0'/'1'");
            }
        }
        return b;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = 1ULL << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    BitString complemented() const {
        BitString b(*this);
        for (auto& w : b.words_) {
            w = ~w;
        }
        b.mask_tail();
        return b;
    }

    static std::size_t hamming(const BitString& a, const BitString& b) {
        if (a.n_ != b.n_) {
            throw LengthMismatch("hamming: bit strings of different length");
        }
        std::size_t d = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            d += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
        }
        return d;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    /// Calls f(index) for every set bit, in increasing index order.
    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                const int tz = std::countr_zero(w);
                f(static_cast<std::size_t>(wi * 64 + static_cast<std::size_t>(tz)));
                w &= w - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool operator==(const BitString&) const = default;

    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

private:
    void mask_tail() {
        if (n_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (~0ULL >> (64 - n_ % 64));
        }
        if (n_ == 0) {
            words_.clear();
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitStringHash {
    std::size_t operator()(const BitString& b) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ b.size();
        for (auto w : b.words()) {
            h = splitmix64(h ^ w);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace evo
