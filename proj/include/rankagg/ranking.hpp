#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankagg {

// Labels are 1-based integers in 1..m.
using Label = std::int32_t;

class RankingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Complete strict ranking of m labels, most preferred first.
class Permutation {
public:
    Permutation() = default;

    // Throws RankingError unless `order` is a bijection on 1..order.size().
    explicit Permutation(std::vector<Label> order);

    static Permutation identity(int m);

    int size() const { return static_cast<int>(order_.size()); }
    std::span<const Label> order() const { return order_; }

    // 1-based position of `label`.
    int rank_of(Label label) const { return rank_[static_cast<std::size_t>(label)]; }
    // Label at 1-based position `pos`.
    Label at(int pos) const { return order_[static_cast<std::size_t>(pos - 1)]; }

    // Exchanges the positions of two labels.
    void swap_labels(Label a, Label b);

    // Raw inverse table, indexed by label (slot 0 unused).
    std::span<const int> rank_table() const { return rank_; }

    friend bool operator==(const Permutation& x, const Permutation& y) { return x.order_ == y.order_; }
    friend auto operator<=>(const Permutation& x, const Permutation& y) { return x.order_ <=> y.order_; }

private:
    std::vector<Label> order_;
    std::vector<int> rank_;
};

// Ordered list of buckets over a subset of the label universe. Labels in the
// same bucket are tied; labels not in any bucket are unranked.
class Ranking {
public:
    static constexpr int kUnranked = 0;

    Ranking() = default;

    // Throws RankingError on empty buckets, duplicate or out-of-range labels,
    // or fewer than two ranked labels.
    Ranking(int m, std::vector<std::vector<Label>> buckets);

    static Ranking from_permutation(const Permutation& p);

    int universe() const { return m_; }
    int ranked_count() const { return static_cast<int>(flat_.size()); }
    int bucket_count() const { return static_cast<int>(bucket_start_.size()) - 1; }

    // 1-based bucket index of `label`, or kUnranked.
    int bucket_of(Label label) const { return bucket_of_[static_cast<std::size_t>(label)]; }
    bool is_ranked(Label label) const { return bucket_of(label) != kUnranked; }

    // Labels of 1-based bucket `b`, sorted ascending.
    std::span<const Label> bucket(int b) const;

    // All ranked labels, bucket by bucket.
    std::span<const Label> flat() const { return flat_; }
    // Offset into flat() of 1-based bucket b is bucket_start()[b-1].
    std::span<const int> bucket_start() const { return bucket_start_; }
    std::span<const int> bucket_table() const { return bucket_of_; }

    // m singleton buckets.
    bool is_permutation() const { return ranked_count() == m_ && bucket_count() == m_; }
    bool is_complete() const { return ranked_count() == m_; }

    // Throws RankingError unless is_permutation().
    Permutation to_permutation() const;

    friend bool operator==(const Ranking& x, const Ranking& y) {
        return x.m_ == y.m_ && x.flat_ == y.flat_ && x.bucket_start_ == y.bucket_start_;
    }

private:
    int m_ = 0;
    std::vector<Label> flat_;
    std::vector<int> bucket_start_;
    std::vector<int> bucket_of_;
};

struct PreferencePair {
    Label preferred = 0;
    Label other = 0;

    friend bool operator==(const PreferencePair&, const PreferencePair&) = default;
    friend auto operator<=>(const PreferencePair&, const PreferencePair&) = default;
};

// Text syntax: buckets joined by '|', labels within a bucket joined by ','.
// Surrounding whitespace is trimmed; interior whitespace is rejected.
Ranking parse_ranking(std::string_view text, int m);
// Syntax check only; no universe or size validation.
std::vector<std::vector<Label>> parse_buckets(std::string_view text);
std::string format_ranking(const Ranking& r);
std::string format_permutation(const Permutation& p);

}  // namespace rankagg
