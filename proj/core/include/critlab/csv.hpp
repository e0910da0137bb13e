#pragma once

#include <string>
#include <vector>

#include "critlab/transform.hpp"

namespace critlab {

// 17-significant-digit scientific formatting: enough for a double to survive
// a round trip through text unchanged.
std::string format_full(double x);

// Minimal CSV table with one header row and numeric cells, written with
// format_full so reruns are byte-identical.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  void add_row(std::initializer_list<double> cells);
  void write(const std::string& path) const;
};

CsvTable read_csv(const std::string& path);

// Physical samples as "r,value" (value is the physical g(r_i)).
void write_function_csv(const std::string& path, const SampledFunction& f);

// Rebuild a sampled function from "r,value" written for the same grid; the
// radii must match the transform's nodes.
SampledFunction read_function_csv(std::shared_ptr<const SpectralTransform> t,
                                  const std::string& path);

} // namespace critlab
