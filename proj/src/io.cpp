#include "wpd/io.hpp"

#include <ostream>
#include <string>

#include <fmt/format.h>

#include "wpd/error.hpp"

namespace wpd {

using nlohmann::json;

std::string format_number(double x) { return fmt::format("{:.12g}", x); }

double round12(double x) { return std::stod(format_number(x)); }

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (const auto& z : m.entries()) out.push_back({z.real(), z.imag()});
  return out;
}

ComplexMatrix matrix_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n * n) {
    throw DualityError(ErrorKind::parse_error,
                       "matrix must be an array of " + std::to_string(n * n) + " [re, im] pairs");
  }
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw DualityError(ErrorKind::parse_error, "matrix entry must be [re, im]");
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(n, std::move(entries));
}

json instance_to_json(const InterferometerInstance& inst) {
  const auto& b = inst.blocks;
  return json{{"s", inst.prep.s},
              {"phi", inst.phi},
              {"n", b.n},
              {"rho_d0", matrix_to_json(inst.rho_d0)},
              {"blocks",
               {{"vpp", matrix_to_json(b.vpp)},
                {"vpm", matrix_to_json(b.vpm)},
                {"vmp", matrix_to_json(b.vmp)},
                {"vmm", matrix_to_json(b.vmm)}}}};
}

InterferometerInstance instance_from_json(const json& j) {
  auto number = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
      throw DualityError(ErrorKind::parse_error, std::string("missing numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
  };
  const double n_raw = number("n");
  if (n_raw < 1.0 || n_raw != static_cast<double>(static_cast<std::size_t>(n_raw))) {
    throw DualityError(ErrorKind::parse_error, "'n' must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(n_raw);
  if (!j.contains("rho_d0") || !j.contains("blocks") || !j.at("blocks").is_object()) {
    throw DualityError(ErrorKind::parse_error, "missing 'rho_d0' or 'blocks'");
  }
  const auto& jb = j.at("blocks");
  auto blk = [&](const char* key) {
    if (!jb.contains(key)) throw DualityError(ErrorKind::parse_error, std::string("missing block ") + key);
    return matrix_from_json(jb.at(key), n);
  };
  InterferometerInstance inst;
  inst.prep.s = number("s");
  inst.phi = number("phi");
  inst.rho_d0 = matrix_from_json(j.at("rho_d0"), n);
  inst.blocks = WwmBlocks{n, blk("vpp"), blk("vpm"), blk("vmp"), blk("vmm")};
  return inst;
}

json report_to_json(const DualityReport& rep) {
  auto opt = [](const std::optional<double>& x) -> json {
    return x ? json(round12(*x)) : json(nullptr);
  };
  json slacks = json::object();
  for (const auto& [name, value] : rep.slacks) slacks[name] = round12(value);
  return json{{"v", round12(rep.v)},
              {"p", round12(rep.p)},
              {"q", round12(rep.q)},
              {"d", round12(rep.d)},
              {"xi", round12(rep.xi)},
              {"r", opt(rep.r)},
              {"chi", opt(rep.chi)},
              {"v_bound_d", round12(rep.v_bound_d)},
              {"v_bound_xi", round12(rep.v_bound_xi)},
              {"xi_minus_d", round12(rep.xi_minus_d)},
              {"stringency_class", rep.stringency_class},
              {"chi_closed_form", opt(rep.chi_closed_form)},
              {"slacks", slacks}};
}

void write_fig3_csv(std::ostream& os, const std::vector<Fig3Point>& grid) {
  os << "s_d_norm,p_q,delta\n";
  for (const auto& pt : grid) {
    os << format_number(pt.s_d_norm) << ',' << format_number(pt.p_q) << ','
       << format_number(pt.delta) << '\n';
  }
}

void write_fig4_csv(std::ostream& os, const std::vector<Fig4Point>& curve) {
  os << "s_d_norm,v_d_sq,v_xi_sq,v_q_sq\n";
  for (const auto& pt : curve) {
    os << format_number(pt.s_d_norm) << ',' << format_number(pt.v_d_sq) << ','
       << format_number(pt.v_xi_sq) << ',' << format_number(pt.v_q_sq) << '\n';
  }
}

}  // namespace wpd
