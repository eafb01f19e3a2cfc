#include "cutmis/reference.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cutmis/error.hpp"

namespace cutmis::reference {

std::optional<double> rsb_density(int degree) {
  for (const auto& e : kRsbTable)
    if (e.degree == degree) return e.density;
  return std::nullopt;
}

const CodingInstance* find_coding_instance(std::string_view name) {
  for (const auto& inst : kCodingTable)
    if (inst.name == name) return &inst;
  return nullptr;
}

int simple_edge_count(const CodingInstance& inst) {
  return inst.name.starts_with("1zc") ? inst.edges / 2 : inst.edges;
}

double formula_r(double n) {
  if (!(n >= 3.0)) throw UsageError("R(n) needs n >= 3, got " + std::to_string(n));
  const double l = std::log2(n);
  return 2.0 * l - 2.0 * std::log2(l) + 2.0 * std::numbers::log2e - 1.0;
}

double formula_sparse_density(double dbar) {
  if (!(dbar > std::numbers::e)) {
    throw UsageError("sparse density formula needs mean degree > e, got " + std::to_string(dbar));
  }
  return (2.0 / dbar) * (std::log(dbar) - std::log(std::log(dbar)) - std::numbers::ln2 + 1.0);
}

}  // namespace cutmis::reference
