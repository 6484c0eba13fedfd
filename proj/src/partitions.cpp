#include "akblocks/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace akblocks {

Partition::Partition(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] < parts_[i + 1])
            throw precondition_error("partition parts must be weakly decreasing");
    }
}

uint32_t Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
    std::vector<uint32_t> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0], 0);
        for (uint32_t part : parts_)
            for (uint32_t j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw precondition_error("a multipartition needs at least one component");
}

uint32_t MultiPartition::n() const noexcept {
    uint32_t total = 0;
    for (const Partition& c : components_) total += c.size();
    return total;
}

std::vector<Node> MultiPartition::nodes() const {
    std::vector<Node> out;
    for (uint32_t k = 0; k < r(); ++k) {
        const auto& parts = components_[k].parts();
        for (uint32_t i = 1; i <= parts.size(); ++i)
            for (uint32_t j = 1; j <= parts[i - 1]; ++j) out.push_back({i, j, k});
    }
    return out;
}

MultiPartition MultiPartition::conjugate() const {
    std::vector<Partition> out;
    for (auto it = components_.rbegin(); it != components_.rend(); ++it)
        out.push_back(it->conjugate());
    return MultiPartition(std::move(out));
}

std::string MultiPartition::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (k > 0) os << '|';
        const auto& parts = components_[k].parts();
        if (parts.empty()) {
            os << '-';
            continue;
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) os << ',';
            os << parts[i];
        }
    }
    return os.str();
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

MultiPartition MultiPartition::parse(const std::string& text, uint32_t expect_r) {
    std::vector<Partition> comps;
    for (const std::string& raw : split(text, '|')) {
        std::string body = trimmed(raw);
        if (body.empty()) throw parse_error("empty component in '" + text + "' (use '-')");
        if (body == "-") {
            comps.emplace_back();
            continue;
        }
        std::vector<uint32_t> parts;
        for (const std::string& tok : split(body, ',')) {
            std::string t = trimmed(tok);
            if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad part '" + tok + "' in '" + text + "'");
            unsigned long v = std::stoul(t);
            if (v > 0xffffffffUL) throw parse_error("part out of range in '" + text + "'");
            parts.push_back(static_cast<uint32_t>(v));
        }
        try {
            comps.emplace_back(std::move(parts));
        } catch (const precondition_error& e) {
            throw parse_error(std::string(e.what()) + " in '" + text + "'");
        }
    }
    if (expect_r != 0 && comps.size() != expect_r)
        throw parse_error("expected " + std::to_string(expect_r) + " components in '" + text + "'");
    return MultiPartition(std::move(comps));
}

std::vector<Partition> enumerate_partitions(uint32_t n) {
    std::vector<Partition> out;
    std::vector<uint32_t> stack;
    // Descending lexicographic order: largest first part first.
    auto rec = [&](auto&& self, uint32_t remaining, uint32_t max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        for (uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
            stack.push_back(part);
            self(self, remaining - part, part);
            stack.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<MultiPartition> enumerate_multipartitions(uint32_t n, uint32_t r) {
    if (r < 1) throw precondition_error("enumerate_multipartitions needs r >= 1");
    std::vector<MultiPartition> out;
    std::vector<Partition> comps;
    auto rec = [&](auto&& self, uint32_t remaining, uint32_t comps_left) -> void {
        if (comps_left == 1) {
            for (const Partition& p : enumerate_partitions(remaining)) {
                comps.push_back(p);
                out.push_back(MultiPartition(comps));
                comps.pop_back();
            }
            return;
        }
        for (uint32_t here = remaining + 1; here-- > 0;) {
            for (const Partition& p : enumerate_partitions(here)) {
                comps.push_back(p);
                self(self, remaining - here, comps_left - 1);
                comps.pop_back();
            }
        }
    };
    rec(rec, n, r);
    return out;
}

bool dominates(const MultiPartition& lhs, const MultiPartition& rhs) {
    if (lhs.r() != rhs.r())
        throw precondition_error("dominance: component count mismatch");
    if (lhs.n() != rhs.n()) throw precondition_error("dominance: sizes differ");
    uint64_t lhs_before = 0, rhs_before = 0;
    for (uint32_t s = 0; s < lhs.r(); ++s) {
        const auto& lp = lhs.component(s).parts();
        const auto& rp = rhs.component(s).parts();
        uint64_t lsum = lhs_before, rsum = rhs_before;
        std::size_t depth = std::max(lp.size(), rp.size());
        for (std::size_t j = 0; j < depth; ++j) {
            lsum += j < lp.size() ? lp[j] : 0;
            rsum += j < rp.size() ? rp[j] : 0;
            if (lsum < rsum) return false;
        }
        lhs_before += lhs.component(s).size();
        rhs_before += rhs.component(s).size();
    }
    return true;
}

StandardTableau::StandardTableau(const MultiPartition& shape,
                                 std::vector<std::vector<std::vector<uint32_t>>> fill)
    : shape_(shape), fill_(std::move(fill)) {
    if (fill_.size() != shape.r()) throw precondition_error("tableau component count mismatch");
    std::vector<bool> seen(shape.n() + 1, false);
    for (uint32_t k = 0; k < shape.r(); ++k) {
        const auto& parts = shape.component(k).parts();
        if (fill_[k].size() != parts.size()) throw precondition_error("tableau row count mismatch");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (fill_[k][i].size() != parts[i]) throw precondition_error("tableau row length mismatch");
            for (std::size_t j = 0; j < parts[i]; ++j) {
                uint32_t v = fill_[k][i][j];
                if (v < 1 || v > shape.n() || seen[v])
                    throw precondition_error("tableau entries must be a bijection onto 1..n");
                seen[v] = true;
                if (j > 0 && fill_[k][i][j - 1] >= v)
                    throw precondition_error("tableau rows must increase");
                if (i > 0 && fill_[k][i - 1][j] >= v)
                    throw precondition_error("tableau columns must increase");
            }
        }
    }
}

uint32_t StandardTableau::entry(const Node& node) const {
    return fill_[node.comp][node.row - 1][node.col - 1];
}

std::vector<uint32_t> StandardTableau::row_reading_word() const {
    std::vector<uint32_t> word;
    for (const auto& comp : fill_)
        for (const auto& row : comp) word.insert(word.end(), row.begin(), row.end());
    return word;
}

namespace {

BigInt factorial(uint32_t n) {
    BigInt f = 1;
    for (uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt hook_count(const Partition& p) {
    const auto& parts = p.parts();
    Partition conj = p.conjugate();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts[i]; ++j)
            hooks *= (parts[i] - j) + (conj.parts()[j] - i) - 1;
    return factorial(p.size()) / hooks;
}

}  // namespace

BigInt count_standard_tableaux(const MultiPartition& shape) {
    BigInt result = factorial(shape.n());
    for (const Partition& comp : shape.components()) {
        result /= factorial(comp.size());
        result *= hook_count(comp);
    }
    return result;
}

StandardTableau superstandard_tableau(const MultiPartition& shape) {
    std::vector<std::vector<std::vector<uint32_t>>> fill(shape.r());
    uint32_t next = 1;
    for (uint32_t k = 0; k < shape.r(); ++k) {
        for (uint32_t len : shape.component(k).parts()) {
            std::vector<uint32_t> row(len);
            for (uint32_t& cell : row) cell = next++;
            fill[k].push_back(std::move(row));
        }
    }
    return StandardTableau(shape, std::move(fill));
}

std::vector<StandardTableau> enumerate_standard_tableaux(const MultiPartition& shape, uint32_t cap) {
    if (shape.n() > cap)
        throw resource_cap_error("tableau enumeration refused for |shape| = " +
                                 std::to_string(shape.n()) + " > cap " + std::to_string(cap));

    std::vector<StandardTableau> out;
    std::vector<std::vector<std::vector<uint32_t>>> fill(shape.r());
    std::vector<std::vector<uint32_t>> filled_len(shape.r());  // cells used per row
    for (uint32_t k = 0; k < shape.r(); ++k) {
        fill[k].assign(shape.component(k).num_rows(), {});
        filled_len[k].assign(shape.component(k).num_rows(), 0);
    }

    auto rec = [&](auto&& self, uint32_t next) -> void {
        if (next > shape.n()) {
            out.emplace_back(shape, fill);
            return;
        }
        for (uint32_t k = 0; k < shape.r(); ++k) {
            const auto& parts = shape.component(k).parts();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                std::size_t j = filled_len[k][i];
                if (j >= parts[i]) continue;                       // row full
                if (i > 0 && filled_len[k][i - 1] <= j) continue;  // cell above still empty
                fill[k][i].push_back(next);
                ++filled_len[k][i];
                self(self, next + 1);
                fill[k][i].pop_back();
                --filled_len[k][i];
            }
        }
    };
    rec(rec, 1);

    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_reading_word() < b.row_reading_word();
    });
    return out;
}

}  // namespace akblocks
