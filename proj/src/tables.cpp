#include "bicm/tables.hpp"

#include <cmath>

#include "bicm/alphabet.hpp"
#include "bicm/util.hpp"

namespace bicm {

namespace {

double gap_db_from_alpha(double alpha) { return alpha > 0.0 ? linear_to_db(kLog2E / alpha) : kInf; }

double pam_gap_db(Eigen::Index size, LabelingKind kind) { return gap_db_from_alpha(alpha_pam_closed(size, kind).alpha); }
double psk_gap_db(Eigen::Index size, LabelingKind kind) { return gap_db_from_alpha(alpha_psk_closed(size, kind).alpha); }

double projection_gap_db(const Labeling& labeling, const Eigen::MatrixXd& v) {
    const Eigen::MatrixXd alphabet = from_projection(labeling, v);
    return gap_db_from_alpha(alpha_bicm_uniform(alphabet, labeling).alpha);
}

double hierarchical_gap_db(const std::vector<double>& distances) {
    const Eigen::MatrixXd alphabet = hierarchical_pam(distances);
    return gap_db_from_alpha(alpha_bicm_uniform(alphabet, nbc(static_cast<int>(distances.size()))).alpha);
}

}  // namespace

std::vector<AsymptoticsRow> asymptotics_table() {
    std::vector<AsymptoticsRow> rows;
    for (LabelingKind kind : {LabelingKind::Brgc, LabelingKind::Nbc, LabelingKind::Bsgc, LabelingKind::Fbc})
        rows.push_back({kind, alpha_pam_limit(kind), alpha_psk_limit(kind)});
    return rows;
}

std::vector<GapRow> gap_table() {
    std::vector<GapRow> rows;
    rows.push_back({"pam:4", "brgc", pam_gap_db(4, LabelingKind::Brgc)});
    rows.push_back({"pam:4", "fbc", pam_gap_db(4, LabelingKind::Fbc)});
    rows.push_back({"pam:4", "nbc", pam_gap_db(4, LabelingKind::Nbc)});
    rows.push_back({"hierarchical-pam:4", "nbc", hierarchical_gap_db({1.0, 5.0})});
    rows.push_back({"psk:8", "brgc", psk_gap_db(8, LabelingKind::Brgc)});
    rows.push_back({"psk:8", "nbc", psk_gap_db(8, LabelingKind::Nbc)});
    rows.push_back({"psk:8", "fbc", psk_gap_db(8, LabelingKind::Fbc)});
    rows.push_back({"psk:8", "bsgc", psk_gap_db(8, LabelingKind::Bsgc)});

    Eigen::MatrixXd v_otto(3, 2);
    v_otto << -1.0, -1.0, 1.0, 0.0, -1.0, 1.0;
    rows.push_back({"otto", "", projection_gap_db(nbc(3), v_otto)});
    Eigen::MatrixXd v_ototo(3, 2);
    v_ototo << -1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0, 0.5, -std::sqrt(3.0) / 2.0;
    rows.push_back({"ototo", "", projection_gap_db(nbc(3), v_ototo)});

    rows.push_back({"hierarchical-pam:8", "nbc", hierarchical_gap_db({1.0, 2.0, 6.0})});
    rows.push_back({"pam:8", "brgc", pam_gap_db(8, LabelingKind::Brgc)});
    rows.push_back({"pam:8", "fbc", pam_gap_db(8, LabelingKind::Fbc)});
    rows.push_back({"pam:8", "nbc", pam_gap_db(8, LabelingKind::Nbc)});
    rows.push_back({"pam:8", "bsgc", pam_gap_db(8, LabelingKind::Bsgc)});
    rows.push_back({"pam:16", "brgc", pam_gap_db(16, LabelingKind::Brgc)});
    rows.push_back({"pam:16", "fbc", pam_gap_db(16, LabelingKind::Fbc)});
    rows.push_back({"pam:16", "nbc", pam_gap_db(16, LabelingKind::Nbc)});
    rows.push_back({"pam:16", "bsgc", pam_gap_db(16, LabelingKind::Bsgc)});
    return rows;
}

}  // namespace bicm
