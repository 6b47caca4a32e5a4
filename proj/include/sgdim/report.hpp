#ifndef SGDIM_REPORT_HPP
#define SGDIM_REPORT_HPP

// Rendering of bound reports and Koszul lab runs. JSON output is fully
// deterministic: objects are emitted with sorted keys and all numbers are
// exact integers, so byte-identical reruns are a testable property.

#include <string>

#include "json.hpp"

#include "sgdim/invariants.hpp"
#include "sgdim/koszul.hpp"
#include "sgdim/parse.hpp"

namespace sgdim {

inline constexpr const char* toolkit_version = "sgdim 1.0.0";

// order-preserving-free json: std::map keys give sorted, stable dumps
using json = nlohmann::json;

json bounds_report_json(const BoundsReport& R, const InputDocument& doc,
                        const BoundsOptions& opt);
std::string bounds_report_table(const BoundsReport& R, const InputDocument& doc,
                                const BoundsOptions& opt);

struct KoszulRun {
    FiniteComplex complex;
    Homology H;
    int depth = 0;
    bool annihilation = true;
    TruncationTower tower;
    std::size_t module_dim = 0;
    std::size_t sequence_size = 0;
};

// Build the lab objects for a document: module from its module section (or
// the free module), sequence from its sequence section (or the variables).
KoszulRun run_koszul(const InputDocument& doc, const Schedule& schedule);

json koszul_report_json(const KoszulRun& run, const InputDocument& doc);
std::string koszul_report_table(const KoszulRun& run, const InputDocument& doc);

} // namespace sgdim

#endif
