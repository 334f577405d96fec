#pragma once

#include "sphere/point_config.hpp"

#include <map>
#include <string>
#include <vector>

namespace sphere {

/// A named configuration. Parametric entries (ngon, simplex, cross_polytope,
/// c_n, diplo_simplex, cell600_120_4, competitor_40_10) take their
/// parameters from `parameters`; n and N are filled in by find_entry.
struct CatalogEntry {
  std::string name;
  int n = 0;
  int N = 0;
  std::map<std::string, double> parameters;
  std::string rule;
  bool balanced = false;  // documented as a balanced harmonic optimum
  double max_inner_product = 2.0;  // documented cosine of the minimal angle; 2 if none
};

/// Default-parameter entries in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// The entry `name` with `parameters` overriding the defaults. Throws
/// UnknownEntry for an unknown name and ParameterOutOfRange for an unknown
/// or invalid parameter.
CatalogEntry find_entry(const std::string& name, const std::map<std::string, double>& parameters = {});

PointConfig build_catalog(const CatalogEntry& entry);

/// Shorthand for build_catalog(find_entry(name, parameters)).
PointConfig build_catalog(const std::string& name, const std::map<std::string, double>& parameters = {});

/// Named sub-builders also used by tests.
PointConfig build_ngon(int N);
PointConfig build_simplex(int n);
PointConfig build_cross_polytope(int n);
PointConfig build_icosahedron();
PointConfig build_600_cell(bool hopf_oriented = false);
PointConfig build_hemicube(int n);
PointConfig build_hopf48();

}  // namespace sphere
