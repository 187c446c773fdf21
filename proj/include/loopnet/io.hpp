#pragma once

#include <filesystem>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "loopnet/catalog.hpp"
#include "loopnet/dual_net.hpp"
#include "loopnet/loop.hpp"

namespace loopnet {

// Plain-text formats. Blank lines and lines starting with '#' are ignored everywhere.
//   loop <n>            then n rows of n indices
//   sts <points> <b>    then b lines "x y z"
//   field p <prime> | field Q    then "x y z" per line ("a/b" allowed over Q)
//   net GF(p) <n> | net Q <n>    then "component 1..3", each with n lines "label x y z"

LoopTable parse_loop(std::istream& in);
std::string format_loop(const LoopTable& loop);

TripleSystem parse_sts(std::istream& in);
std::string format_sts(const TripleSystem& sts);

using AnyPoints = std::variant<std::vector<ProjPoint<Fp>>, std::vector<ProjPoint<Rational>>>;
AnyPoints parse_points(std::istream& in);

using AnyNet = std::variant<DualNet<Fp>, DualNet<Rational>>;
AnyNet parse_net(std::istream& in);

template <typename Scalar>
std::string format_points(const Field& field, const std::vector<ProjPoint<Scalar>>& pts) {
  using T = FieldTraits<Scalar>;
  std::ostringstream os;
  os << "field " << (field.rational() ? std::string("Q") : "p " + std::to_string(field.p)) << '\n';
  for (const auto& pt : pts) os << T::to_string(pt[0]) << ' ' << T::to_string(pt[1]) << ' ' << T::to_string(pt[2]) << '\n';
  return os.str();
}

template <typename Scalar>
std::string format_net(const DualNet<Scalar>& net) {
  using T = FieldTraits<Scalar>;
  std::ostringstream os;
  os << "net " << net.field.describe() << ' ' << net.n << '\n';
  for (int c = 0; c < 3; ++c) {
    os << "component " << c + 1 << '\n';
    for (int x = 0; x < net.n; ++x) {
      const auto& pt = net.comps[c][x];
      os << x << ' ' << T::to_string(pt[0]) << ' ' << T::to_string(pt[1]) << ' ' << T::to_string(pt[2]) << '\n';
    }
  }
  return os.str();
}

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace loopnet
