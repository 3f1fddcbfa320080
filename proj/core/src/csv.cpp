#include "lbshock/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lbshock::csv {

std::string format_value(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

void write_profile(std::ostream& os, const ProfileTable& table) {
  table.validate();
  os << kProfileHeader;
  if (table.exact) {
    os << kExactSuffix;
  }
  os << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << format_value(table.x[i]) << ',' << format_value(table.rho[i]) << ',' << format_value(table.u[i]) << ','
       << format_value(table.e[i]) << ',' << format_value(table.p[i]);
    if (table.exact) {
      os << ',' << format_value(table.exact->rho[i]) << ',' << format_value(table.exact->u[i]) << ','
         << format_value(table.exact->e[i]) << ',' << format_value(table.exact->p[i]);
    }
    os << '\n';
  }
}

void write_grid(std::ostream& os, const FlowField& field, const GasModel& g) {
  os << kGridHeader << '\n';
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const NodeState& s = field.at(i, j);
      const double e = internal_energy(s);
      os << format_value(i + 0.5) << ',' << format_value(j + 0.5) << ',' << format_value(s.rho) << ','
         << format_value(s.vel.x) << ',' << format_value(s.vel.y) << ',' << format_value(e) << ','
         << format_value(pressure(s.rho, e, g)) << '\n';
    }
  }
}

namespace {

std::vector<double> parse_row(const std::string& line, std::size_t line_no) {
  std::vector<double> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (true) {
    double v = 0.0;
    const auto res = std::from_chars(p, end, v);
    if (res.ec != std::errc() || !std::isfinite(v)) {
      std::ostringstream os;
      os << "csv: bad value on line " << line_no;
      throw std::runtime_error(os.str());
    }
    values.push_back(v);
    p = res.ptr;
    if (p == end) {
      break;
    }
    if (*p != ',') {
      std::ostringstream os;
      os << "csv: expected ',' on line " << line_no;
      throw std::runtime_error(os.str());
    }
    ++p;
  }
  return values;
}

}  // namespace

ProfileTable read_profile(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::runtime_error("csv: empty input");
  }
  const std::string plain = kProfileHeader;
  const std::string with_exact = plain + kExactSuffix;
  bool has_exact = false;
  if (line == with_exact) {
    has_exact = true;
  } else if (line != plain) {
    throw std::runtime_error("csv: unexpected header '" + line + "'");
  }
  const std::size_t width = has_exact ? 9 : 5;

  ProfileTable table;
  if (has_exact) {
    table.exact.emplace();
  }
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const std::vector<double> v = parse_row(line, line_no);
    if (v.size() != width) {
      std::ostringstream os;
      os << "csv: expected " << width << " columns on line " << line_no;
      throw std::runtime_error(os.str());
    }
    table.push(v[0], v[1], v[2], v[3], v[4]);
    if (has_exact) {
      table.exact->rho.push_back(v[5]);
      table.exact->u.push_back(v[6]);
      table.exact->e.push_back(v[7]);
      table.exact->p.push_back(v[8]);
    }
  }
  table.validate();
  return table;
}

}  // namespace lbshock::csv
