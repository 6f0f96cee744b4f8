#include "bicm/labeling.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bicm/util.hpp"

namespace bicm {

LabelingKind labeling_kind_from_string(const std::string& name) {
    if (name == "brgc") return LabelingKind::Brgc;
    if (name == "nbc") return LabelingKind::Nbc;
    if (name == "bsgc") return LabelingKind::Bsgc;
    if (name == "fbc") return LabelingKind::Fbc;
    throw std::domain_error("unknown labeling kind '" + name + "' (expected brgc|nbc|bsgc|fbc)");
}

std::string to_string(LabelingKind kind) {
    switch (kind) {
        case LabelingKind::Brgc: return "brgc";
        case LabelingKind::Nbc: return "nbc";
        case LabelingKind::Bsgc: return "bsgc";
        case LabelingKind::Fbc: return "fbc";
    }
    return "?";
}

Labeling::Labeling(Eigen::MatrixXi bits) : bits_(std::move(bits)) {
    const Eigen::Index m = bits_.cols();
    const Eigen::Index rows = bits_.rows();
    if (m < 1) throw std::domain_error("labeling order must be at least 1");
    if (!is_power_of_two(rows) || rows != (Eigen::Index{1} << m))
        throw std::domain_error("labeling must have 2^order rows");
    std::set<std::int64_t> seen;
    for (Eigen::Index i = 0; i < rows; ++i) {
        std::int64_t value = 0;
        for (Eigen::Index k = 0; k < m; ++k) {
            const int b = bits_(i, k);
            if (b != 0 && b != 1) throw std::domain_error("labeling entries must be 0 or 1");
            value = (value << 1) | b;
        }
        if (!seen.insert(value).second) throw std::domain_error("labeling rows must be pairwise distinct");
    }
}

Labeling Labeling::trivial() {
    Eigen::MatrixXi bits(2, 1);
    bits << 0, 1;
    return Labeling(bits);
}

std::int64_t Labeling::codeword(Eigen::Index row) const {
    std::int64_t value = 0;
    for (int k = 0; k < order(); ++k) value = (value << 1) | bits_(row, k);
    return value;
}

std::string Labeling::to_text() const {
    std::string out;
    for (Eigen::Index i = 0; i < size(); ++i) {
        for (int k = 0; k < order(); ++k) out += static_cast<char>('0' + bits_(i, k));
        out += '\n';
    }
    return out;
}

Labeling expand(const Labeling& l) {
    const Eigen::Index m_rows = l.size();
    Eigen::MatrixXi bits(2 * m_rows, l.order() + 1);
    for (Eigen::Index i = 0; i < m_rows; ++i) {
        bits.block(2 * i, 0, 1, l.order()) = l.matrix().row(i);
        bits.block(2 * i + 1, 0, 1, l.order()) = l.matrix().row(i);
    }
    // appended column follows the period-4 pattern 0,1,1,0
    for (Eigen::Index i = 0; i < 2 * m_rows; ++i) {
        const Eigen::Index phase = i % 4;
        bits(i, l.order()) = (phase == 1 || phase == 2) ? 1 : 0;
    }
    return Labeling(bits);
}

Labeling reflect(const Labeling& l) {
    const Eigen::Index m_rows = l.size();
    Eigen::MatrixXi bits(2 * m_rows, l.order() + 1);
    for (Eigen::Index i = 0; i < m_rows; ++i) {
        bits(i, 0) = 0;
        bits(m_rows + i, 0) = 1;
        bits.block(i, 1, 1, l.order()) = l.matrix().row(i);
        bits.block(m_rows + i, 1, 1, l.order()) = l.matrix().row(m_rows - 1 - i);
    }
    return Labeling(bits);
}

Labeling repeat(const Labeling& l) {
    const Eigen::Index m_rows = l.size();
    Eigen::MatrixXi bits(2 * m_rows, l.order() + 1);
    for (Eigen::Index i = 0; i < m_rows; ++i) {
        bits(i, 0) = 0;
        bits(m_rows + i, 0) = 1;
        bits.block(i, 1, 1, l.order()) = l.matrix().row(i);
        bits.block(m_rows + i, 1, 1, l.order()) = l.matrix().row(i);
    }
    return Labeling(bits);
}

Labeling nbc(int order) {
    if (order < 1) throw std::domain_error("nbc requires order >= 1");
    const Eigen::Index m_rows = Eigen::Index{1} << order;
    Eigen::MatrixXi bits(m_rows, order);
    for (Eigen::Index i = 0; i < m_rows; ++i)
        for (int k = 0; k < order; ++k) bits(i, k) = static_cast<int>((i >> (order - 1 - k)) & 1);
    return Labeling(bits);
}

Labeling brgc(int order) {
    if (order < 1) throw std::domain_error("brgc requires order >= 1");
    Labeling l = Labeling::trivial();
    for (int k = 1; k < order; ++k) l = expand(l);
    return l;
}

Labeling bsgc(int order) {
    if (order < 3) throw std::domain_error("bsgc requires order >= 3");
    Eigen::MatrixXi bits = brgc(order).matrix();
    for (Eigen::Index i = 0; i < bits.rows(); ++i) bits(i, 0) ^= bits(i, order - 1);
    return Labeling(bits);
}

Labeling fbc(int order) {
    if (order < 2) throw std::domain_error("fbc requires order >= 2");
    return reflect(nbc(order - 1));
}

Labeling Labeling::standard(LabelingKind kind, int order) {
    switch (kind) {
        case LabelingKind::Brgc: return brgc(order);
        case LabelingKind::Nbc: return nbc(order);
        case LabelingKind::Bsgc: return bsgc(order);
        case LabelingKind::Fbc: return fbc(order);
    }
    throw std::domain_error("unknown labeling kind");
}

Labeling ordered_product(const Labeling& a, const Labeling& b) {
    const Eigen::Index rows_a = a.size(), rows_b = b.size();
    Eigen::MatrixXi bits(rows_a * rows_b, a.order() + b.order());
    for (Eigen::Index i = 0; i < rows_a; ++i)
        for (Eigen::Index j = 0; j < rows_b; ++j) {
            bits.block(rows_b * i + j, 0, 1, a.order()) = a.matrix().row(i);
            bits.block(rows_b * i + j, a.order(), 1, b.order()) = b.matrix().row(j);
        }
    return Labeling(bits);
}

Eigen::MatrixXi modified_matrix(const Labeling& l) {
    const int m = l.order();
    Eigen::MatrixXi q(l.size(), m);
    for (Eigen::Index i = 0; i < l.size(); ++i)
        for (int k = 0; k < m; ++k) q(i, k) = l.bit(i, m - 1 - k) ? -1 : 1;
    return q;
}

Labeling labeling_from_modified(const Eigen::MatrixXi& q) {
    const Eigen::Index m = q.cols();
    Eigen::MatrixXi bits(q.rows(), m);
    for (Eigen::Index i = 0; i < q.rows(); ++i)
        for (Eigen::Index k = 0; k < m; ++k) {
            const int v = q(i, m - 1 - k);
            if (v != 1 && v != -1) throw std::domain_error("modified labeling entries must be +-1");
            bits(i, k) = v == -1 ? 1 : 0;
        }
    return Labeling(bits);
}

Eigen::MatrixXi column_signs(const Labeling& l) {
    Eigen::MatrixXi s(l.size(), l.order());
    for (Eigen::Index i = 0; i < l.size(); ++i)
        for (int k = 0; k < l.order(); ++k) s(i, k) = 1 - 2 * l.bit(i, k);
    return s;
}

namespace {

Labeling apply_variant(const Labeling& l, const std::vector<int>& column_of, unsigned flips) {
    const int m = l.order();
    Eigen::MatrixXi bits(l.size(), m);
    for (Eigen::Index i = 0; i < l.size(); ++i)
        for (int k = 0; k < m; ++k) bits(i, k) = l.bit(i, column_of[static_cast<std::size_t>(k)]) ^ ((flips >> k) & 1u);
    return Labeling(bits);
}

}  // namespace

void for_each_trivial_variant(const Labeling& l, const std::function<bool(const Labeling&)>& visit) {
    const int m = l.order();
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned flips = 0; flips < (1u << m); ++flips)
            if (!visit(apply_variant(l, perm, flips))) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Labeling> trivial_variants(const Labeling& l) {
    std::set<std::string> seen;
    std::vector<Labeling> out;
    for_each_trivial_variant(l, [&](const Labeling& v) {
        if (seen.insert(v.to_text()).second) out.push_back(v);
        return true;
    });
    return out;
}

bool is_trivial_variant_of(const Labeling& l, const Labeling& base) {
    if (l.order() != base.order() || l.size() != base.size()) return false;
    const int m = l.order();
    // Map each column of l to a (base column, flip) pair; the map must be a
    // bijection on columns for the whole matrix to match.
    std::vector<int> source(static_cast<std::size_t>(m), -1);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m && source[static_cast<std::size_t>(k)] < 0; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            bool same = true, complement = true;
            for (Eigen::Index i = 0; i < l.size() && (same || complement); ++i) {
                if (l.bit(i, k) != base.bit(i, j)) same = false;
                if (l.bit(i, k) != (base.bit(i, j) ^ 1)) complement = false;
            }
            if (same || complement) {
                source[static_cast<std::size_t>(k)] = j;
                used[static_cast<std::size_t>(j)] = true;
            }
        }
        if (source[static_cast<std::size_t>(k)] < 0) return false;
    }
    return true;
}

Labeling parse_labeling_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw std::domain_error("labeling text is empty");
    const std::size_t m = lines.front().size();
    Eigen::MatrixXi bits(static_cast<Eigen::Index>(lines.size()), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() != m) throw std::domain_error("labeling rows must all have the same length");
        for (std::size_t k = 0; k < m; ++k) {
            const char c = lines[i][k];
            if (c != '0' && c != '1') throw std::domain_error("labeling rows must contain only '0' and '1'");
            bits(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = c - '0';
        }
    }
    return Labeling(bits);
}

Labeling load_labeling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open labeling file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_labeling_text(buffer.str());
}

}  // namespace bicm
