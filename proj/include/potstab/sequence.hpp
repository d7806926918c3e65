#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace potstab {

/// A degree sequence kept in nonincreasing order. Zero terms are legal and
/// count toward the length.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Sorts the terms nonincreasing. Throws std::invalid_argument on a
    /// negative term.
    explicit DegreeSequence(std::vector<int> terms);
    DegreeSequence(std::initializer_list<int> terms);

    const std::vector<int>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// 1-based access, matching d_1 >= d_2 >= ... >= d_n.
    int d(std::size_t i) const { return terms_.at(i - 1); }
    /// 1-based access that reads zero past the end.
    int d_or_zero(std::size_t i) const noexcept {
        return i >= 1 && i <= terms_.size() ? terms_[i - 1] : 0;
    }
    int max() const noexcept { return terms_.empty() ? 0 : terms_.front(); }
    int min() const noexcept { return terms_.empty() ? 0 : terms_.back(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> terms_;
};

std::int64_t sum(const DegreeSequence& seq) noexcept;

/// Erdős–Gallai test; also rejects d_1 > n-1.
bool is_graphic(const DegreeSequence& seq);
bool is_graphic(std::span<const int> nonincreasing);

/// Kleitman–Wang lay-off of the term at 1-based `index`. Throws
/// std::out_of_range for a bad index and std::domain_error when a
/// decrement would go negative (the input cannot have been graphic).
DegreeSequence layoff(const DegreeSequence& seq, std::size_t index);

/// Positions (1-based, in the input) whose terms a lay-off of `index`
/// decrements.
std::vector<std::size_t> layoff_targets(const DegreeSequence& seq, std::size_t index);

struct BatchLayoff {
    DegreeSequence result;
    std::size_t count = 0;
    std::int64_t laid_off_sum = 0;
    std::vector<int> laid_off_values;
};

/// Repeatedly lays off a minimum term (the rightmost one) while it is below
/// `threshold`.
BatchLayoff layoff_batch_below(const DegreeSequence& seq, int threshold);

/// l1 distance with the shorter sequence padded by zeros.
std::int64_t l1_distance(const DegreeSequence& a, const DegreeSequence& b) noexcept;

/// d_i >= h_i for i = 1..|h|; terms of `seq` past its end read as zero.
bool degree_sufficient(const DegreeSequence& seq, const DegreeSequence& h) noexcept;

/// Parses "7,1^7" style text. Plain comma lists are accepted, whitespace is
/// ignored. Throws ParseError.
DegreeSequence parse_sequence(std::string_view text);

/// Run-length form: "7,1^7", "4,4,1^6". Runs of three or more are compressed;
/// the empty sequence formats as "".
std::string format_sequence(const DegreeSequence& seq);

} // namespace potstab
