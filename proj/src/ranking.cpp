#include "rankagg/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace rankagg {

Permutation::Permutation(std::vector<Label> order) : order_(std::move(order)) {
    const auto m = order_.size();
    rank_.assign(m + 1, 0);
    for (std::size_t k = 0; k < m; ++k) {
        const Label label = order_[k];
        if (label < 1 || static_cast<std::size_t>(label) > m)
            throw RankingError("permutation label " + std::to_string(label) + " outside 1.." + std::to_string(m));
        if (rank_[static_cast<std::size_t>(label)] != 0)
            throw RankingError("permutation repeats label " + std::to_string(label));
        rank_[static_cast<std::size_t>(label)] = static_cast<int>(k + 1);
    }
}

Permutation Permutation::identity(int m) {
    std::vector<Label> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 1);
    return Permutation(std::move(order));
}

void Permutation::swap_labels(Label a, Label b) {
    auto& ra = rank_[static_cast<std::size_t>(a)];
    auto& rb = rank_[static_cast<std::size_t>(b)];
    std::swap(order_[static_cast<std::size_t>(ra - 1)], order_[static_cast<std::size_t>(rb - 1)]);
    std::swap(ra, rb);
}

Ranking::Ranking(int m, std::vector<std::vector<Label>> buckets) : m_(m) {
    if (m < 2) throw RankingError("universe size must be at least 2");
    bucket_of_.assign(static_cast<std::size_t>(m) + 1, kUnranked);
    bucket_start_.reserve(buckets.size() + 1);
    int index = 0;
    for (auto& labels : buckets) {
        ++index;
        if (labels.empty()) throw RankingError("empty bucket at position " + std::to_string(index));
        std::sort(labels.begin(), labels.end());
        bucket_start_.push_back(static_cast<int>(flat_.size()));
        for (Label label : labels) {
            if (label < 1 || label > m)
                throw RankingError("label " + std::to_string(label) + " outside 1.." + std::to_string(m));
            auto& slot = bucket_of_[static_cast<std::size_t>(label)];
            if (slot != kUnranked) throw RankingError("duplicate label " + std::to_string(label));
            slot = index;
            flat_.push_back(label);
        }
    }
    bucket_start_.push_back(static_cast<int>(flat_.size()));
    if (flat_.size() < 2) throw RankingError("a ranking needs at least 2 ranked labels");
}

Ranking Ranking::from_permutation(const Permutation& p) {
    std::vector<std::vector<Label>> buckets;
    buckets.reserve(static_cast<std::size_t>(p.size()));
    for (Label label : p.order()) buckets.push_back({label});
    return Ranking(p.size(), std::move(buckets));
}

std::span<const Label> Ranking::bucket(int b) const {
    const auto begin = static_cast<std::size_t>(bucket_start_[static_cast<std::size_t>(b - 1)]);
    const auto end = static_cast<std::size_t>(bucket_start_[static_cast<std::size_t>(b)]);
    return std::span<const Label>(flat_).subspan(begin, end - begin);
}

Permutation Ranking::to_permutation() const {
    if (!is_permutation()) throw RankingError("ranking has ties or missing labels; not a permutation");
    return Permutation(flat_);
}

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

Label parse_label(std::string_view token) {
    Label value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end)
        throw RankingError("invalid label token '" + std::string(token) + "'");
    return value;
}

}  // namespace

std::vector<std::vector<Label>> parse_buckets(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw RankingError("empty ranking text");

    std::vector<std::vector<Label>> buckets;
    std::size_t pos = 0;
    while (true) {
        const auto bar = text.find('|', pos);
        const auto bucket_text = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        if (bucket_text.empty()) throw RankingError("empty bucket at position " + std::to_string(buckets.size() + 1));
        auto& labels = buckets.emplace_back();
        std::size_t lpos = 0;
        while (true) {
            const auto comma = bucket_text.find(',', lpos);
            labels.push_back(parse_label(
                bucket_text.substr(lpos, comma == std::string_view::npos ? std::string_view::npos : comma - lpos)));
            if (comma == std::string_view::npos) break;
            lpos = comma + 1;
        }
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return buckets;
}

Ranking parse_ranking(std::string_view text, int m) { return Ranking(m, parse_buckets(text)); }

std::string format_ranking(const Ranking& r) {
    std::string out;
    for (int b = 1; b <= r.bucket_count(); ++b) {
        if (b > 1) out += '|';
        bool first = true;
        for (Label label : r.bucket(b)) {
            if (!first) out += ',';
            out += std::to_string(label);
            first = false;
        }
    }
    return out;
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (Label label : p.order()) {
        if (!out.empty()) out += '|';
        out += std::to_string(label);
    }
    return out;
}

}  // namespace rankagg
