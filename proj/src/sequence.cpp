#include "pslforge/sequence.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "pslforge/kernels.hpp"

namespace pslforge {

BinarySequence::BinarySequence(std::vector<std::int8_t> elements)
    : elems_(std::move(elements)) {
    if (elems_.size() < 2) {
        throw std::invalid_argument("sequence length must be at least 2");
    }
    for (std::int8_t e : elems_) {
        if (e != -1 && e != 1) {
            throw std::invalid_argument("sequence elements must be -1 or +1");
        }
    }
}

BinarySequence BinarySequence::from_pm_string(std::string_view text) {
    std::vector<std::int8_t> elems;
    elems.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            elems.push_back(1);
        } else if (c == '-') {
            elems.push_back(-1);
        } else {
            throw std::invalid_argument("expected only '+' and '-' characters");
        }
    }
    return BinarySequence(std::move(elems));
}

std::string BinarySequence::to_pm_string() const {
    std::string s;
    s.reserve(elems_.size());
    for (std::int8_t e : elems_) s.push_back(e > 0 ? '+' : '-');
    return s;
}

BinarySequence BinarySequence::reversed() const {
    std::vector<std::int8_t> out(elems_.rbegin(), elems_.rend());
    return BinarySequence(std::move(out));
}

BinarySequence BinarySequence::negated() const {
    std::vector<std::int8_t> out(elems_);
    for (auto& e : out) e = static_cast<std::int8_t>(-e);
    return BinarySequence(std::move(out));
}

BinarySequence BinarySequence::alternated() const {
    std::vector<std::int8_t> out(elems_);
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = static_cast<std::int8_t>(-out[i]);
    return BinarySequence(std::move(out));
}

BinarySequence BinarySequence::with_flip(int i) const {
    if (i < 0 || i >= length()) throw std::out_of_range("flip index out of range");
    std::vector<std::int8_t> out(elems_);
    out[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-out[static_cast<std::size_t>(i)]);
    return BinarySequence(std::move(out));
}

SidelobeProfile::SidelobeProfile(int n, std::vector<std::int32_t> values)
    : n_(n), values_(std::move(values)) {
    if (n_ < 2) throw std::invalid_argument("profile requires n >= 2");
    if (values_.size() != static_cast<std::size_t>(n_ - 1)) {
        throw std::invalid_argument("profile must hold exactly n-1 sidelobes");
    }
    for (int u = 1; u <= n_ - 1; ++u) {
        const std::int32_t c = values_[static_cast<std::size_t>(u - 1)];
        if (std::abs(c) > n_ - u) throw std::invalid_argument("sidelobe exceeds its bound");
        if (((c - (n_ - u)) & 1) != 0) throw std::invalid_argument("sidelobe parity violated");
    }
}

std::int32_t SidelobeProfile::at_shift(int u) const {
    if (u < 1 || u > n_ - 1) throw std::out_of_range("shift must be in 1..n-1");
    return values_[static_cast<std::size_t>(u - 1)];
}

std::int32_t SidelobeProfile::peak() const noexcept {
    std::int32_t m = 0;
    for (std::int32_t c : values_) m = std::max(m, std::abs(c));
    return m;
}

std::int64_t SidelobeProfile::sum_squares() const noexcept {
    std::int64_t s = 0;
    for (std::int32_t c : values_) s += static_cast<std::int64_t>(c) * c;
    return s;
}

FitnessMagnitude::FitnessMagnitude(int value) : value_(value) {
    if (value < 1) throw std::invalid_argument("fitness magnitude must be >= 1");
}

std::int64_t checked_ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int k = 0; k < exp; ++k) {
        if (__builtin_mul_overflow(r, base, &r)) {
            throw std::overflow_error("integer power overflows int64");
        }
    }
    return r;
}

SidelobeProfile aacf(const BinarySequence& seq) {
    const int n = seq.length();
    std::vector<std::int32_t> values(static_cast<std::size_t>(n - 1));
    kernels::select_kernels(1, n).aacf(seq.elements().data(), n, values.data());
    return SidelobeProfile(n, std::move(values));
}

int psl(const BinarySequence& seq) { return aacf(seq).peak(); }

int psl(const SidelobeProfile& profile) { return profile.peak(); }

double psl_db(std::int64_t psl_value, int n) {
    if (psl_value < 1) throw std::domain_error("psl_db requires psl >= 1");
    if (n < 2) throw std::domain_error("psl_db requires n >= 2");
    return 20.0 * std::log10(static_cast<double>(psl_value) / static_cast<double>(n));
}

double merit_factor(const SidelobeProfile& profile) {
    const double n = profile.sequence_length();
    return n * n / (2.0 * static_cast<double>(profile.sum_squares()));
}

double merit_factor(const BinarySequence& seq) { return merit_factor(aacf(seq)); }

std::int64_t fitness(const SidelobeProfile& profile, FitnessMagnitude p) {
    std::int64_t total = 0;
    for (std::int32_t c : profile.values()) {
        const std::int64_t term = checked_ipow(std::abs(static_cast<std::int64_t>(c)), p.value());
        if (__builtin_add_overflow(total, term, &total)) {
            throw std::overflow_error("fitness sum overflows int64");
        }
    }
    return total;
}

std::int64_t fitness(const BinarySequence& seq, FitnessMagnitude p) {
    return fitness(aacf(seq), p);
}

} // namespace pslforge
