#include "potstab/sequence.hpp"

#include "potstab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>

namespace potstab {

namespace {

constexpr std::size_t max_parsed_terms = 50'000'000;

void sort_nonincreasing(std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<>{}); }

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int t : terms_)
        if (t < 0) throw std::invalid_argument("degree sequence terms must be nonnegative");
    sort_nonincreasing(terms_);
}

DegreeSequence::DegreeSequence(std::initializer_list<int> terms)
    : DegreeSequence(std::vector<int>(terms)) {}

std::int64_t sum(const DegreeSequence& seq) noexcept {
    return std::accumulate(seq.terms().begin(), seq.terms().end(), std::int64_t{0});
}

bool is_graphic(std::span<const int> d) {
    const std::size_t n = d.size();
    if (n == 0) return true;
    if (d.back() < 0) return false;
    if (static_cast<std::size_t>(d.front()) > n - 1) return false;

    std::vector<std::int64_t> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];
    if (suffix[0] % 2 != 0) return false;

    // For each p, terms at 0-based positions >= p contribute min(d_i, p).
    // `first_small` is the first position whose term is < p; it only moves
    // left as p grows.
    std::size_t first_small = n;
    std::int64_t prefix = 0;
    for (std::size_t p = 1; p <= n; ++p) {
        prefix += d[p - 1];
        while (first_small > 0 && d[first_small - 1] < static_cast<int>(p)) --first_small;
        const std::size_t big_end = std::max(first_small, p);
        const auto big_count = static_cast<std::int64_t>(big_end - p);
        const std::int64_t rhs = static_cast<std::int64_t>(p) * static_cast<std::int64_t>(p - 1) +
                                 big_count * static_cast<std::int64_t>(p) + suffix[big_end];
        if (prefix > rhs) return false;
    }
    return true;
}

bool is_graphic(const DegreeSequence& seq) { return is_graphic(std::span<const int>(seq.terms())); }

std::vector<std::size_t> layoff_targets(const DegreeSequence& seq, std::size_t index) {
    const std::size_t n = seq.size();
    if (index < 1 || index > n) throw std::out_of_range("lay-off index out of range");
    const auto di = static_cast<std::size_t>(seq.d(index));
    if (di > n - 1) throw std::domain_error("lay-off term exceeds n-1; sequence is not graphic");

    std::vector<std::size_t> targets;
    targets.reserve(di);
    if (di < index) {
        for (std::size_t j = 1; j <= di; ++j) targets.push_back(j);
    } else {
        for (std::size_t j = 1; j < index; ++j) targets.push_back(j);
        for (std::size_t j = index + 1; j <= di + 1; ++j) targets.push_back(j);
    }
    return targets;
}

DegreeSequence layoff(const DegreeSequence& seq, std::size_t index) {
    const auto targets = layoff_targets(seq, index);
    std::vector<int> out = seq.terms();
    for (std::size_t j : targets) {
        if (--out[j - 1] < 0)
            throw std::domain_error("lay-off drives a term negative; sequence is not graphic");
    }
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(index - 1));
    return DegreeSequence(std::move(out));
}

BatchLayoff layoff_batch_below(const DegreeSequence& seq, int threshold) {
    BatchLayoff r{seq, 0, 0, {}};
    while (!r.result.empty() && r.result.min() < threshold) {
        const int value = r.result.min();
        r.result = layoff(r.result, r.result.size());
        ++r.count;
        r.laid_off_sum += value;
        r.laid_off_values.push_back(value);
    }
    return r;
}

std::int64_t l1_distance(const DegreeSequence& a, const DegreeSequence& b) noexcept {
    const std::size_t n = std::max(a.size(), b.size());
    std::int64_t total = 0;
    for (std::size_t i = 1; i <= n; ++i) total += std::abs(a.d_or_zero(i) - b.d_or_zero(i));
    return total;
}

bool degree_sufficient(const DegreeSequence& seq, const DegreeSequence& h) noexcept {
    for (std::size_t i = 1; i <= h.size(); ++i)
        if (seq.d_or_zero(i) < h.d(i)) return false;
    return true;
}

DegreeSequence parse_sequence(std::string_view text) {
    std::vector<int> terms;
    std::size_t pos = 0;

    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                     text[pos] == '\r'))
            ++pos;
    };
    auto read_int = [&](const char* what) -> long long {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) throw ParseError(std::string("expected ") + what, start);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc{} || value > std::numeric_limits<int>::max())
            throw ParseError(std::string(what) + " overflows", start);
        return value;
    };

    skip_ws();
    if (pos == text.size()) return {};
    while (true) {
        const long long value = read_int("degree");
        long long repeat = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::size_t at = pos;
            repeat = read_int("repeat count");
            if (repeat == 0) throw ParseError("repeat count must be positive", at);
        }
        if (terms.size() + static_cast<std::size_t>(repeat) > max_parsed_terms)
            throw ParseError("sequence too long", pos);
        terms.insert(terms.end(), static_cast<std::size_t>(repeat), static_cast<int>(value));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' or '^'", pos);
        ++pos;
    }
    return DegreeSequence(std::move(terms));
}

std::string format_sequence(const DegreeSequence& seq) {
    std::string out;
    const auto& t = seq.terms();
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        // Pairs stay spelled out ("4,4,1^6"); longer runs are compressed.
        if (j - i >= 3) {
            if (!out.empty()) out += ',';
            out += std::to_string(t[i]) + '^' + std::to_string(j - i);
        } else {
            for (std::size_t r = i; r < j; ++r) {
                if (!out.empty()) out += ',';
                out += std::to_string(t[i]);
            }
        }
        i = j;
    }
    return out;
}

} // namespace potstab
