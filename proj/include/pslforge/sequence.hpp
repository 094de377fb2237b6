#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pslforge {

/// A binary sequence over {-1, +1}, length >= 2. Immutable value type.
class BinarySequence {
public:
    /// Takes ownership of `elements`; every entry must be -1 or +1 and
    /// there must be at least two of them.
    explicit BinarySequence(std::vector<std::int8_t> elements);

    /// Parses a string of '+' and '-' characters, one per element.
    static BinarySequence from_pm_string(std::string_view text);

    int length() const noexcept { return static_cast<int>(elems_.size()); }
    std::int8_t operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
    std::span<const std::int8_t> elements() const noexcept { return elems_; }

    std::string to_pm_string() const;

    BinarySequence reversed() const;
    BinarySequence negated() const;
    /// Multiplies element i by (-1)^i.
    BinarySequence alternated() const;
    BinarySequence with_flip(int i) const;

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<std::int8_t> elems_;
};

/// Aperiodic autocorrelation sidelobes C_1..C_{n-1} of a length-n sequence.
/// The mainlobe C_0 == n is not stored.
class SidelobeProfile {
public:
    SidelobeProfile(int n, std::vector<std::int32_t> values);

    int sequence_length() const noexcept { return n_; }
    /// Number of stored sidelobes, n-1.
    int size() const noexcept { return static_cast<int>(values_.size()); }
    /// C_u for u in 1..n-1.
    std::int32_t at_shift(int u) const;
    std::span<const std::int32_t> values() const noexcept { return values_; }

    /// max_u |C_u|; at least 1 since |C_{n-1}| == 1.
    std::int32_t peak() const noexcept;
    std::int64_t sum_squares() const noexcept;

private:
    int n_;
    std::vector<std::int32_t> values_;
};

/// Exponent P of the fitness function sum |C_u|^P. The useful window is
/// small (3..5); 4 is the default.
class FitnessMagnitude {
public:
    explicit FitnessMagnitude(int value = 4);
    int value() const noexcept { return value_; }

private:
    int value_;
};

/// b^e in exact int64 arithmetic; throws std::overflow_error when the
/// result does not fit.
std::int64_t checked_ipow(std::int64_t base, int exp);

SidelobeProfile aacf(const BinarySequence& seq);

int psl(const BinarySequence& seq);
int psl(const SidelobeProfile& profile);

/// 20*log10(psl_value/n). Requires psl_value >= 1 and n >= 2.
double psl_db(std::int64_t psl_value, int n);

/// n^2 / (2 * sum C_u^2).
double merit_factor(const BinarySequence& seq);
double merit_factor(const SidelobeProfile& profile);

/// sum_u |C_u|^P, exact. Throws std::overflow_error instead of wrapping.
std::int64_t fitness(const BinarySequence& seq, FitnessMagnitude p = FitnessMagnitude{});
std::int64_t fitness(const SidelobeProfile& profile, FitnessMagnitude p = FitnessMagnitude{});

} // namespace pslforge
