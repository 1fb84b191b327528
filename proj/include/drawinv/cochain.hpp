#ifndef DRAWINV_COCHAIN_HPP
#define DRAWINV_COCHAIN_HPP

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "drawinv/combinatorics.hpp"
#include "drawinv/rational.hpp"

namespace drawinv {

enum class Ring { gf2, integer };

/// Finitely supported map from a cell-tuple index set to GF(2) or Z. The
/// coefficient vector always covers the index set exactly.
struct Cochain {
    std::shared_ptr<const CellPairIndex> index;
    Ring ring = Ring::gf2;
    std::vector<Int> coeffs;

    Cochain() = default;
    Cochain(std::shared_ptr<const CellPairIndex> ix, Ring rg)
        : index(std::move(ix)), ring(rg), coeffs(index->entries.size(), Int(0)) {}

    Int& at(const std::vector<Cell>& entry) {
        int i = index->find(entry);
        if (i < 0) throw index_mismatch_error("entry not in index");
        return coeffs[i];
    }
    const Int& at(const std::vector<Cell>& entry) const {
        int i = index->find(entry);
        if (i < 0) throw index_mismatch_error("entry not in index");
        return coeffs[i];
    }

    void reduce() {
        if (ring != Ring::gf2) return;
        for (Int& c : coeffs) c = ((c % 2) + 2) % 2;
    }

    bool is_zero() const {
        for (const Int& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    long ones() const {
        long k = 0;
        for (const Int& c : coeffs) k += (c != 0);
        return k;
    }

    /// Sum of all coefficients; over GF(2) this is the total parity.
    Int total() const {
        Int s = 0;
        for (const Int& c : coeffs) s += c;
        if (ring == Ring::gf2) s = ((s % 2) + 2) % 2;
        return s;
    }

    Cochain& operator+=(const Cochain& o) {
        require_same_index(o);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        reduce();
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        require_same_index(o);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        reduce();
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

    Cochain reduced_mod2(std::shared_ptr<const CellPairIndex> target) const;

    void require_same_index(const Cochain& o) const {
        if (ring != o.ring || !(*index == *o.index))
            throw index_mismatch_error("cochain index/ring mismatch");
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.ring == b.ring && *a.index == *b.index && a.coeffs == b.coeffs;
    }
};

/// Mod-2 reduction of an integral cochain onto the matching unordered index
/// (on shared entries the two ordered values have equal parity).
inline Cochain Cochain::reduced_mod2(std::shared_ptr<const CellPairIndex> target) const {
    Cochain out(target, Ring::gf2);
    for (std::size_t i = 0; i < target->entries.size(); ++i) {
        const std::vector<Cell>& e = target->entries[i];
        int j = index->find(e);
        if (j < 0) throw index_mismatch_error("reduced_mod2: entry missing from source");
        out.coeffs[i] = ((coeffs[j] % 2) + 2) % 2;
    }
    return out;
}

namespace detail {
inline int max_vertex(const CellPairIndex& ix) {
    int m = 0;
    for (const auto& entry : ix.entries)
        for (const Cell& c : entry)
            for (int i = 0; i < c.k; ++i) m = std::max(m, c.v[i]);
    return m;
}
}  // namespace detail

inline std::string cell_to_string(const Cell& c, bool dashed) {
    std::string s;
    for (int i = 0; i < c.k; ++i) {
        if (i && dashed) s += '-';
        s += std::to_string(c.v[i]);
    }
    return s;
}

inline Cell cell_from_string(const std::string& s) {
    std::vector<int> vals;
    if (s.find('-') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '-')) vals.push_back(std::stoi(tok));
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw error("bad cell token: '" + s + "'");
            vals.push_back(ch - '0');
        }
    }
    std::sort(vals.begin(), vals.end());
    if (vals.size() == 1) return Cell(vals[0]);
    if (vals.size() == 2) return Cell(make_edge(vals[0], vals[1]));
    if (vals.size() == 3) return Cell(make_face(vals[0], vals[1], vals[2]));
    throw error("bad cell token: '" + s + "'");
}

/// Canonical dump, one line per index entry: `{12,34} = 1` for unordered
/// indices, `(12,34) = -1` for ordered ones. Vertices above 9 are written
/// dash-separated inside a cell.
inline std::string cochain_dump(const Cochain& nu) {
    bool unordered = nu.index->kind == IndexKind::graph_kstar ||
                     nu.index->kind == IndexKind::hyper_kstar;
    bool dashed = detail::max_vertex(*nu.index) > 9;
    std::string out;
    for (std::size_t i = 0; i < nu.index->entries.size(); ++i) {
        const auto& entry = nu.index->entries[i];
        out += unordered ? '{' : '(';
        for (std::size_t j = 0; j < entry.size(); ++j) {
            if (j) out += ',';
            out += cell_to_string(entry[j], dashed);
        }
        out += unordered ? '}' : ')';
        out += " = " + nu.coeffs[i].get_str() + "\n";
    }
    return out;
}

/// Parses a dump produced for the given index (entries may come in any order
/// but must cover the index exactly).
inline Cochain cochain_parse(const std::string& text,
                             std::shared_ptr<const CellPairIndex> index, Ring ring) {
    Cochain nu(index, ring);
    std::vector<bool> seen(index->entries.size(), false);
    std::stringstream ss(text);
    std::string line;
    int ln = 0;
    while (std::getline(ss, line)) {
        ++ln;
        std::string t;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty() || t[0] == '#') continue;
        if (t.front() != '{' && t.front() != '(') throw parse_error("expected entry", ln);
        auto close = t.find(t.front() == '{' ? '}' : ')');
        auto eq = t.find('=', close);
        if (close == std::string::npos || eq == std::string::npos)
            throw parse_error("malformed entry", ln);
        std::vector<Cell> entry;
        std::stringstream cells(t.substr(1, close - 1));
        std::string tok;
        while (std::getline(cells, tok, ',')) entry.push_back(cell_from_string(tok));
        int i = index->find(entry);
        if (i < 0) throw parse_error("entry not in index", ln);
        if (seen[i]) throw parse_error("duplicate entry", ln);
        seen[i] = true;
        nu.coeffs[i] = Int(t.substr(eq + 1));
        if (ring == Ring::gf2 && nu.coeffs[i] != 0 && nu.coeffs[i] != 1)
            throw parse_error("GF(2) value must be 0 or 1", ln);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw parse_error("missing entry for index position " + std::to_string(i), 0);
    return nu;
}

}  // namespace drawinv

#endif
