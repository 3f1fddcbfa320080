#ifndef LBSHOCK_CSV_HPP_
#define LBSHOCK_CSV_HPP_

#include <iosfwd>
#include <string>

#include "lbshock/flow_field.hpp"
#include "lbshock/gas.hpp"
#include "lbshock/profile.hpp"

// CSV output: LF line endings, no trailing delimiter, every value printed
// with 17 significant digits (%.17g).
namespace lbshock::csv {

inline constexpr const char* kProfileHeader = "x,rho,u,e,p";
inline constexpr const char* kExactSuffix = ",rho_exact,u_exact,e_exact,p_exact";
inline constexpr const char* kGridHeader = "x,y,rho,u,v,e,p";

std::string format_value(double v);

// Exact columns are appended when the table carries them.
void write_profile(std::ostream& os, const ProfileTable& table);

// One row per interior node, x-fastest, positions at node centres.
void write_grid(std::ostream& os, const FlowField& field, const GasModel& g);

// Parses a profile CSV written by write_profile. Throws std::runtime_error on
// unknown headers, ragged rows or non-finite values.
ProfileTable read_profile(std::istream& is);

}  // namespace lbshock::csv

#endif  // LBSHOCK_CSV_HPP_
