#include "rankagg/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rankagg {

void MallowsParams::validate() const {
    if (m < 2) throw std::invalid_argument("mallows: m must be at least 2");
    if (n < 1) throw std::invalid_argument("mallows: n must be at least 1");
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw std::invalid_argument("mallows: theta must be finite and >= 0");
    if (center.size() != m) throw std::invalid_argument("mallows: center must be a permutation of m labels");
}

void PartializeParams::validate() const {
    if (!(p_discard >= 0.0 && p_discard < 1.0)) throw std::invalid_argument("partialize: p_discard must be in [0, 1)");
    if (!(p_keep >= 0.0 && p_keep <= 1.0)) throw std::invalid_argument("partialize: p_keep must be in [0, 1]");
}

Permutation sample_mallows(const MallowsParams& params, Rng& rng) {
    params.validate();
    const double q = std::exp(-params.theta);
    std::vector<Label> order;
    order.reserve(static_cast<std::size_t>(params.m));
    std::vector<double> weight;  // weight[k] = q^k
    weight.reserve(static_cast<std::size_t>(params.m));
    double total = 0.0;
    for (int i = 1; i <= params.m; ++i) {
        weight.push_back(i == 1 ? 1.0 : weight.back() * q);
        total += weight.back();
        // k = number of already placed labels the new one jumps over.
        double u = rng.uniform01() * total;
        int k = 0;
        while (k < i - 1 && u >= weight[static_cast<std::size_t>(k)]) {
            u -= weight[static_cast<std::size_t>(k)];
            ++k;
        }
        const Label label = params.center.at(i);
        order.insert(order.end() - k, label);
    }
    return Permutation(std::move(order));
}

Dataset generate_dataset(const MallowsParams& params, std::uint64_t seed) {
    params.validate();
    Rng rng(seed);
    std::vector<Ranking> rankings;
    rankings.reserve(static_cast<std::size_t>(params.n));
    for (int k = 0; k < params.n; ++k) rankings.push_back(Ranking::from_permutation(sample_mallows(params, rng)));
    return Dataset(params.m, std::move(rankings));
}

Ranking partialize(const Permutation& p, const PartializeParams& params, Rng& rng) {
    params.validate();
    for (int attempt = 0; attempt < kMaxPartializeAttempts; ++attempt) {
        std::vector<std::vector<Label>> buckets;
        std::size_t kept = 0;
        for (Label label : p.order()) {
            if (rng.bernoulli(params.p_discard)) continue;
            if (buckets.empty() || !rng.bernoulli(params.p_keep))
                buckets.push_back({label});
            else
                buckets.back().push_back(label);
            ++kept;
        }
        if (kept >= 2) return Ranking(p.size(), std::move(buckets));
    }
    throw GenerationError("partialize: fewer than 2 labels survived in " + std::to_string(kMaxPartializeAttempts) +
                          " consecutive draws");
}

// ---------------------------------------------------------------------------

RankingSyntax parse_syntax(std::string_view name) {
    if (name == "buckets") return RankingSyntax::Buckets;
    if (name == "order") return RankingSyntax::Order;
    if (name == "ranks") return RankingSyntax::Ranks;
    throw std::invalid_argument("unknown ranking syntax '" + std::string(name) + "' (expected buckets, order, ranks)");
}

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

bool parse_int(std::string_view s, int& out) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return !s.empty() && ec == std::errc{} && ptr == end;
}

// Recognises "# m=<int> n=<int>".
bool parse_header(std::string_view line, int& m, int& n) {
    if (line.empty() || line.front() != '#') return false;
    std::istringstream in{std::string(line.substr(1))};
    std::string a, b, rest;
    if (!(in >> a >> b) || (in >> rest)) return false;
    if (a.rfind("m=", 0) != 0 || b.rfind("n=", 0) != 0) return false;
    return parse_int(std::string_view(a).substr(2), m) && parse_int(std::string_view(b).substr(2), n);
}

std::vector<int> split_ints(std::string_view line, int line_no) {
    std::vector<int> values;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        int v = 0;
        if (!parse_int(token, v)) throw DatasetFormatError("invalid integer token '" + token + "'", line_no);
        values.push_back(v);
    }
    return values;
}

// Whitespace-separated permutation in Order or Ranks syntax. A line that
// contains 0 is read as 0-based.
std::vector<std::vector<Label>> parse_flat_line(std::string_view line, RankingSyntax syntax, int line_no) {
    auto values = split_ints(line, line_no);
    if (values.size() < 2) throw DatasetFormatError("a permutation needs at least 2 entries", line_no);
    if (std::find(values.begin(), values.end(), 0) != values.end())
        for (auto& v : values) ++v;
    const int m = static_cast<int>(values.size());
    std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : values) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]++)
            throw DatasetFormatError("line is not a permutation of 1.." + std::to_string(m), line_no);
    }
    std::vector<std::vector<Label>> buckets(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (syntax == RankingSyntax::Order)
            buckets[static_cast<std::size_t>(k)] = {values[static_cast<std::size_t>(k)]};
        else
            buckets[static_cast<std::size_t>(values[static_cast<std::size_t>(k)] - 1)] = {k + 1};
    }
    return buckets;
}

}  // namespace

Dataset parse_dataset(std::string_view text, RankingSyntax syntax) {
    int header_m = 0, header_n = 0;
    bool have_header = false;
    bool seen_ranking = false;
    std::vector<std::pair<int, std::vector<std::vector<Label>>>> lines;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!have_header && !seen_ranking && parse_header(line, header_m, header_n)) have_header = true;
            continue;
        }
        seen_ranking = true;
        try {
            if (syntax == RankingSyntax::Buckets)
                lines.emplace_back(line_no, parse_buckets(line));
            else
                lines.emplace_back(line_no, parse_flat_line(line, syntax, line_no));
        } catch (const RankingError& e) {
            throw DatasetFormatError(e.what(), line_no);
        }
    }
    if (lines.empty()) throw DatasetFormatError("dataset contains no rankings", 0);

    int m = header_m;
    if (!have_header) {
        for (const auto& [no, buckets] : lines)
            for (const auto& b : buckets) m = std::max(m, *std::max_element(b.begin(), b.end()));
    }
    if (have_header && header_n != static_cast<int>(lines.size()))
        throw DatasetFormatError("header declares n=" + std::to_string(header_n) + " but file has " +
                                     std::to_string(lines.size()) + " rankings",
                                 0);

    std::vector<Ranking> rankings;
    rankings.reserve(lines.size());
    for (auto& [no, buckets] : lines) {
        try {
            rankings.emplace_back(m, std::move(buckets));
        } catch (const RankingError& e) {
            throw DatasetFormatError(e.what(), no);
        }
    }
    return Dataset(m, std::move(rankings));
}

Dataset read_dataset(const std::filesystem::path& path, RankingSyntax syntax) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading " + path.string());
    return parse_dataset(buffer.str(), syntax);
}

std::string serialize_dataset(const Dataset& d, std::span<const std::string> comments) {
    std::string out = "# m=" + std::to_string(d.m()) + " n=" + std::to_string(d.n()) + "\n";
    for (const auto& c : comments) out += "# " + c + "\n";
    for (const auto& r : d.rankings()) {
        out += format_ranking(r);
        out += '\n';
    }
    return out;
}

void write_dataset(const Dataset& d, const std::filesystem::path& path, std::span<const std::string> comments) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_dataset(d, comments);
    out.flush();
    if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace rankagg
