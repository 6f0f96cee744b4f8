#ifndef BICM_TABLES_HPP
#define BICM_TABLES_HPP

#include <string>
#include <vector>

#include "bicm/asymptotics.hpp"

namespace bicm {

/// Large-alphabet first-order asymptotics per labeling (PAM and PSK limits).
struct AsymptoticsRow {
    LabelingKind labeling;
    AlphaResult pam;
    AlphaResult psk;
};
std::vector<AsymptoticsRow> asymptotics_table();

/// Zero-rate SNR gaps log2(e)/alpha for the named constellations.
struct GapRow {
    std::string constellation;
    std::string labeling;  // empty when the constellation fixes it
    double gap_db;
};
std::vector<GapRow> gap_table();

}  // namespace bicm

#endif
