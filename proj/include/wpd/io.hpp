#pragma once

// JSON and CSV formats.
//
// Instance JSON (full double precision so that replays are exact):
//   {
//     "s": <real>, "phi": <real>, "n": <int>,
//     "rho_d0": [[re, im], ...],                 // n*n pairs, row-major
//     "blocks": {"vpp": [[re, im], ...], "vpm": ..., "vmp": ..., "vmm": ...}
//   }
//
// Report JSON: flat object with v, p, q, d, xi, r (nullable), chi (nullable),
// v_bound_d, v_bound_xi, xi_minus_d, stringency_class, chi_closed_form
// (nullable) and slacks{...}. Report values are rounded to 12 significant digits.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpd/interferometer.hpp"
#include "wpd/measures.hpp"
#include "wpd/sqds.hpp"

namespace wpd {

/// 12 significant digits, shortest form.
std::string format_number(double x);
/// x rounded to 12 significant digits.
double round12(double x);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, std::size_t n);

nlohmann::json instance_to_json(const InterferometerInstance& inst);
/// Parses the schema above; throws DualityError(parse_error) on malformed
/// input. Physical validity is checked separately by validate().
InterferometerInstance instance_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DualityReport& rep);

void write_fig3_csv(std::ostream& os, const std::vector<Fig3Point>& grid);
void write_fig4_csv(std::ostream& os, const std::vector<Fig4Point>& curve);

}  // namespace wpd
