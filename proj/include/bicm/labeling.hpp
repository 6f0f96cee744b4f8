#ifndef BICM_LABELING_HPP
#define BICM_LABELING_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bicm {

enum class LabelingKind { Brgc, Nbc, Bsgc, Fbc };

LabelingKind labeling_kind_from_string(const std::string& name);
std::string to_string(LabelingKind kind);

/// Binary labeling of order m: a 2^m x m matrix of bits, one distinct
/// codeword per row (a bijection onto {0,1}^m).
class Labeling {
  public:
    /// Validates bit entries, the power-of-two row count and row distinctness.
    explicit Labeling(Eigen::MatrixXi bits);

    static Labeling standard(LabelingKind kind, int order);
    static Labeling trivial();  // [0; 1]

    int order() const { return static_cast<int>(bits_.cols()); }
    Eigen::Index size() const { return bits_.rows(); }
    int bit(Eigen::Index row, int position) const { return bits_(row, position); }
    const Eigen::MatrixXi& matrix() const { return bits_; }

    /// Row read as an integer, column 0 the most significant digit.
    std::int64_t codeword(Eigen::Index row) const;

    /// Canonical text form: one bit string per line, row i on line i.
    std::string to_text() const;

    bool operator==(const Labeling& other) const { return bits_ == other.bits_; }
    bool operator!=(const Labeling& other) const { return !(*this == other); }

  private:
    Eigen::MatrixXi bits_;
};

Labeling brgc(int order);
Labeling nbc(int order);
Labeling bsgc(int order);
Labeling fbc(int order);

/// Order-raising constructions: each maps an order-m labeling to order m+1.
Labeling expand(const Labeling& l);
Labeling reflect(const Labeling& l);
Labeling repeat(const Labeling& l);

/// Ordered direct product: row q*i+j is [row i of a, row j of b], q = 2^order(b).
Labeling ordered_product(const Labeling& a, const Labeling& b);

/// Modified labeling matrix Q: columns reversed, bits mapped 0 -> +1, 1 -> -1.
Eigen::MatrixXi modified_matrix(const Labeling& l);

/// Inverse of modified_matrix.
Labeling labeling_from_modified(const Eigen::MatrixXi& q);

/// Per-column +-1 view without the column reversal: entry (i,k) is 1-2*bit(i,k).
Eigen::MatrixXi column_signs(const Labeling& l);

/// All labelings reachable by a column permutation composed with per-column
/// bit inversions, deduplicated. Materialized; intended for order <= 4.
std::vector<Labeling> trivial_variants(const Labeling& l);

/// Lazy variant walk for larger orders; visits all m! * 2^m transforms
/// (duplicates possible when the labeling has symmetry). Stops early when the
/// visitor returns false.
void for_each_trivial_variant(const Labeling& l, const std::function<bool(const Labeling&)>& visit);

/// True when `l` equals some column permutation + per-column inversion of `base`.
bool is_trivial_variant_of(const Labeling& l, const Labeling& base);

/// Plain-text format: one codeword per line, order inferred from line length.
Labeling parse_labeling_text(const std::string& text);
Labeling load_labeling_file(const std::string& path);

}  // namespace bicm

#endif
