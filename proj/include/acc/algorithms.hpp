#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acc/counters.hpp"
#include "acc/shift_array.hpp"

namespace acc {

enum class FoldMode {
    Sum,
    Product,
};

// Left fold from the neutral element (0 for sum, 1 for product). 64-bit
// accumulator; overflow beyond that is out of contract.
inline long long accumulate(const std::vector<long long>& values, FoldMode mode) {
    long long acc = (mode == FoldMode::Sum) ? 0 : 1;
    for (long long v : values) acc = (mode == FoldMode::Sum) ? acc + v : acc * v;
    return acc;
}

inline long long factorial(int n) {
    std::vector<long long> range;
    for (int i = 1; i <= n; i++) range.push_back(i);
    return accumulate(range, FoldMode::Product);
}

// Decimal digits, least significant first. Canonical form has no trailing
// zero digit except the single-digit zero itself.
using DigitNumber = std::vector<int>;

inline DigitNumber digits_from_int(long long v) {
    DigitNumber d;
    if (v == 0) return {0};
    while (v > 0) {
        d.push_back(static_cast<int>(v % 10));
        v /= 10;
    }
    return d;
}

inline long long digits_to_int(const DigitNumber& d) {
    long long v = 0;
    for (size_t i = d.size(); i > 0; i--) v = v * 10 + d[i - 1];
    return v;
}

// Column-by-column addition with carry, the shorter number padded with
// implicit zeros; a final carry becomes one more digit. Rejects non-digit
// elements.
inline std::optional<DigitNumber> add_by_digits(const DigitNumber& a, const DigitNumber& b) {
    for (int d : a)
        if (d < 0 || d > 9) return std::nullopt;
    for (int d : b)
        if (d < 0 || d > 9) return std::nullopt;
    DigitNumber out;
    size_t width = a.size() > b.size() ? a.size() : b.size();
    int carry = 0;
    for (size_t i = 0; i < width; i++) {
        int column = carry;
        if (i < a.size()) column += a[i];
        if (i < b.size()) column += b[i];
        out.push_back(column % 10);
        carry = column / 10;
    }
    if (carry > 0) out.push_back(carry);
    return out;
}

// Maximum value and the first index attaining it; the strict comparison
// never replaces on ties. Empty input has no maximum.
template <typename T>
std::optional<std::pair<T, int>> find_max(const std::vector<T>& values,
                                          OpCounters* counters = nullptr) {
    if (values.empty()) return std::nullopt;
    T best = values[0];
    int best_index = 0;
    for (size_t i = 1; i < values.size(); i++) {
        count_comparison(counters);
        if (best < values[i]) {
            best = values[i];
            best_index = static_cast<int>(i);
        }
    }
    return std::make_pair(best, best_index);
}

// Count of positions where the two arrays agree; lengths must match.
template <typename T>
std::optional<int> match_arrays(const std::vector<T>& a, const std::vector<T>& b,
                                OpCounters* counters = nullptr) {
    if (a.size() != b.size()) return std::nullopt;
    int matches = 0;
    for (size_t i = 0; i < a.size(); i++) {
        count_comparison(counters);
        if (a[i] == b[i]) matches++;
    }
    return matches;
}

// All matching indices in ascending order; the head of the result is the
// first match.
template <typename T>
std::vector<int> linear_search(const std::vector<T>& values, const T& target,
                               OpCounters* counters = nullptr) {
    std::vector<int> hits;
    for (size_t i = 0; i < values.size(); i++) {
        count_comparison(counters);
        if (values[i] == target) hits.push_back(static_cast<int>(i));
    }
    return hits;
}

struct SearchOutcome {
    bool found = false;
    int index = 0;
};

// Binary search over an ascending sequence. One comparison is counted per
// probe (the three-way test of one element). Terminates for every input:
// the loop ends as soon as low passes high, so a target below the whole
// range cannot spin.
template <typename T>
SearchOutcome binary_search(const std::vector<T>& sorted_values, const T& target,
                            OpCounters* counters = nullptr) {
    int low = 0;
    int high = static_cast<int>(sorted_values.size()) - 1;
    while (low <= high) {
        int mid = (low + high) / 2;
        count_comparison(counters);
        if (sorted_values[static_cast<size_t>(mid)] == target) return {true, mid};
        if (target < sorted_values[static_cast<size_t>(mid)])
            high = mid - 1;
        else
            low = mid + 1;
    }
    return {false, 0};
}

enum class SortStrategy {
    ExtractMax,
    InPlace,
};

// Descending sort, two interchangeable strategies: extract_max repeatedly
// pulls the maximum into a fresh sequence; in_place does pairwise
// compare-and-swap. Neither is stable; both are permutations of the input.
template <typename T>
std::vector<T> sort_descending(std::vector<T> values, SortStrategy strategy,
                               OpCounters* counters = nullptr) {
    if (strategy == SortStrategy::ExtractMax) {
        std::vector<T> out;
        out.reserve(values.size());
        while (!values.empty()) {
            auto max = find_max(values, counters);
            out.push_back(max->first);
            count_move(counters);
            // erase shifts everything after the extracted slot down one
            size_t at = static_cast<size_t>(max->second);
            for (size_t i = at + 1; i < values.size(); i++) {
                values[i - 1] = values[i];
                count_move(counters);
            }
            values.pop_back();
        }
        return out;
    }
    for (size_t i = 0; i + 1 < values.size(); i++) {
        for (size_t j = i + 1; j < values.size(); j++) {
            count_comparison(counters);
            if (values[j] > values[i]) {
                T temp = values[i];
                values[i] = values[j];
                values[j] = temp;
                count_move(counters, 3);
            }
        }
    }
    return values;
}

// Inserts into a descending ShiftArray at the first slot whose resident the
// value exceeds; a value smaller than everything goes to the end.
inline ArrayStatus sorted_insert(ShiftArray& arr, int value, OpCounters* counters = nullptr) {
    if (arr.length >= arr.capacity()) return ArrayStatus::Full;
    int index = arr.length;
    for (int i = 0; i < arr.length; i++) {
        count_comparison(counters);
        if (value > arr.slots[static_cast<size_t>(i)]) {
            index = i;
            break;
        }
    }
    return insert_at(arr, index, value, counters);
}

// One table row: the grades column count is fixed by the caller; -1 marks a
// grade not defined yet.
struct StudentRecord {
    std::string name;
    int id = 0;
    std::vector<int> grades;
    int average = 0;

    bool operator==(const StudentRecord&) const = default;
};

// Descending sort by one projected key; comparisons look at the key only but
// whole records swap, so every field stays with its row.
template <typename Proj>
std::vector<StudentRecord> sort_records_by_key(std::vector<StudentRecord> records, Proj key,
                                               OpCounters* counters = nullptr) {
    for (size_t i = 0; i + 1 < records.size(); i++) {
        for (size_t j = i + 1; j < records.size(); j++) {
            count_comparison(counters);
            if (key(records[j]) > key(records[i])) {
                StudentRecord temp = records[i];
                records[i] = records[j];
                records[j] = temp;
                count_move(counters, 3);
            }
        }
    }
    return records;
}

} // namespace acc
