#include "critlab/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace critlab {

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

void CsvTable::add_row(std::initializer_list<double> cells) {
  rows.emplace_back(cells);
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    std::ostringstream msg;
    msg << "cannot open \"" << path << "\" for writing";
    throw std::runtime_error(msg.str());
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ",";
    out << header[i];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      std::ostringstream msg;
      msg << "row with " << row.size() << " cells under a " << header.size()
          << "-column header";
      throw std::runtime_error(msg.str());
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_full(row[i]);
    }
    out << "\n";
  }
  if (!out) {
    std::ostringstream msg;
    msg << "failed while writing \"" << path << "\"";
    throw std::runtime_error(msg.str());
  }
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::ostringstream msg;
    msg << "cannot open \"" << path << "\" for reading";
    throw std::runtime_error(msg.str());
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    std::ostringstream msg;
    msg << "\"" << path << "\" is empty";
    throw std::runtime_error(msg.str());
  }
  std::stringstream hdr(line);
  std::string cell;
  while (std::getline(hdr, cell, ',')) table.header.push_back(cell);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != cell.size() || cell.empty()) {
        std::ostringstream msg;
        msg << "\"" << path << "\" line " << lineno << ": cell \"" << cell
            << "\" is not a number";
        throw std::runtime_error(msg.str());
      }
      values.push_back(v);
    }
    if (values.size() != table.header.size()) {
      std::ostringstream msg;
      msg << "\"" << path << "\" line " << lineno << ": " << values.size()
          << " cells under a " << table.header.size() << "-column header";
      throw std::runtime_error(msg.str());
    }
    table.rows.push_back(std::move(values));
  }
  return table;
}

void write_function_csv(const std::string& path, const SampledFunction& f) {
  CsvTable table;
  table.header = {"r", "value"};
  for (int i = 0; i < f.transform->size(); ++i) {
    table.add_row({f.transform->r()[i], f.value(i)});
  }
  table.write(path);
}

SampledFunction read_function_csv(std::shared_ptr<const SpectralTransform> t,
                                  const std::string& path) {
  if (!t) throw std::invalid_argument("read_function_csv needs a transform");
  const CsvTable table = read_csv(path);
  if (table.header != std::vector<std::string>{"r", "value"}) {
    std::ostringstream msg;
    msg << "\"" << path << "\" must have header r,value";
    throw std::runtime_error(msg.str());
  }
  if (static_cast<int>(table.rows.size()) != t->size()) {
    std::ostringstream msg;
    msg << "\"" << path << "\" holds " << table.rows.size()
        << " samples but the grid has " << t->size();
    throw std::runtime_error(msg.str());
  }
  SampledFunction f;
  f.transform = t;
  f.h.resize(t->size());
  for (int i = 0; i < t->size(); ++i) {
    const double r = t->r()[i];
    if (std::fabs(table.rows[i][0] - r) > 1e-9 * std::max(1.0, r)) {
      std::ostringstream msg;
      msg << "\"" << path << "\" row " << i << ": radius "
          << table.rows[i][0] << " does not match the grid node " << r;
      throw std::runtime_error(msg.str());
    }
    f.h[i] = t->reduce_weight(r) * table.rows[i][1];
  }
  return f;
}

} // namespace critlab
