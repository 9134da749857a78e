// Copyright 2026 The gaussfock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "gaussfock/cli/state_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "gaussfock/errors.hpp"

namespace gaussfock::cli {
namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json complex_json(Complex c) { return ordered_json::array({c.real(), c.imag()}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("expected [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::vector<double> reals_from(const json& j) { return j.get<std::vector<double>>(); }

void put_le(std::ofstream& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  unsigned char bytes[8];
  for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>(bits >> (8 * b));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

double get_le(const unsigned char* bytes) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
  return std::bit_cast<double>(bits);
}

}  // namespace

ordered_json params_to_json(const GaussianParams& params) {
  ordered_json w = ordered_json::array();
  for (int j = 0; j < params.modes(); ++j) w.push_back(complex_json(params.mean()[j]));
  ordered_json s = ordered_json::array();
  const RMatrix& m = params.covariance().matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    s.push_back(std::move(row));
  }
  return {{"w", std::move(w)}, {"S", std::move(s)}, {"S_storage", "xy"}};
}

GaussianParams params_from_json(const json& j) {
  std::vector<Complex> w;
  for (const auto& c : j.at("w")) w.push_back(complex_from(c));
  const auto& s = j.at("S");
  const auto n = static_cast<Eigen::Index>(s.size());
  RMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto row = reals_from(s.at(static_cast<std::size_t>(r)));
    if (static_cast<Eigen::Index>(row.size()) != n) throw InvalidArgument("params: S is not square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return GaussianParams(ModeVector(std::move(w)), RealMatrix2n(std::move(m)));
}

ordered_json kind_to_json(const StateKind& kind) {
  struct Visitor {
    ordered_json operator()(const VacuumState&) const { return {{"kind", "vacuum"}}; }
    ordered_json operator()(const CoherentState& s) const {
      ordered_json alpha = ordered_json::array();
      for (Complex c : s.displacement.amplitudes()) alpha.push_back(complex_json(c));
      return {{"kind", "coherent"}, {"alpha", std::move(alpha)}};
    }
    ordered_json operator()(const ThermalState& s) const {
      return {{"kind", "thermal"}, {"nbar", s.mean_occupation}};
    }
    ordered_json operator()(const SqueezedState& s) const {
      return {{"kind", "squeezed"}, {"r", s.r}, {"phi", s.phi}};
    }
  };
  return std::visit(Visitor{}, kind);
}

StateKind kind_from_json(const json& j) {
  const std::string name = j.at("kind").get<std::string>();
  if (name == "vacuum") return VacuumState{};
  if (name == "coherent") {
    std::vector<Complex> alpha;
    for (const auto& c : j.at("alpha")) alpha.push_back(complex_from(c));
    return CoherentState{ModeVector(std::move(alpha))};
  }
  if (name == "thermal") return ThermalState{reals_from(j.at("nbar"))};
  if (name == "squeezed") return SqueezedState{reals_from(j.at("r")), reals_from(j.at("phi"))};
  throw InvalidArgument("unknown state kind '" + name + "'");
}

void write_state(const fs::path& dir, const DensityMatrix& rho, const StateKind& kind,
                 const GaussianParams& analytic) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidArgument("cannot create directory " + dir.string() + ": " + ec.message());

  std::ofstream bin(dir / kStateBinary, std::ios::binary | std::ios::trunc);
  if (!bin) throw InvalidArgument("cannot write " + (dir / kStateBinary).string());
  const CMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put_le(bin, m(r, c).real());
      put_le(bin, m(r, c).imag());
    }
  }
  if (!bin) throw InvalidArgument("write failed for " + (dir / kStateBinary).string());

  const FockSpec& spec = rho.spec();
  ordered_json meta;
  meta["format_version"] = kStateFormatVersion;
  meta["binary"] = kStateBinary;
  meta["encoding"] = "float64 little-endian, interleaved re/im, row-major";
  meta["modes"] = spec.modes();
  meta["cutoff"] = spec.cutoff();
  meta["dimension"] = spec.dimension();
  meta["basis_ordering"] = "row-major over occupation tuples (k_1, ..., k_n), k_1 slowest";
  meta["leakage"] = rho.leakage();
  meta["state"] = kind_to_json(kind);
  meta["analytic"] = params_to_json(analytic);
  std::ofstream side(dir / kStateSidecar, std::ios::trunc);
  if (!side) throw InvalidArgument("cannot write " + (dir / kStateSidecar).string());
  side << meta.dump(2) << '\n';
}

StoredState read_state(const fs::path& path) {
  const fs::path dir = fs::is_directory(path) ? path : path.parent_path();
  std::ifstream side(dir / kStateSidecar);
  if (!side) throw InvalidArgument("cannot read " + (dir / kStateSidecar).string());
  json meta;
  try {
    meta = json::parse(side);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed state sidecar: ") + e.what());
  }
  try {
    if (meta.at("format_version").get<int>() != kStateFormatVersion) {
      throw InvalidArgument("unsupported state format version");
    }
    const FockSpec spec(meta.at("modes").get<int>(), meta.at("cutoff").get<int>());
    const std::string bin_name = meta.value("binary", std::string(kStateBinary));
    std::ifstream bin(dir / bin_name, std::ios::binary);
    if (!bin) throw InvalidArgument("cannot read " + (dir / bin_name).string());
    const auto d = spec.size();
    std::vector<unsigned char> bytes(static_cast<std::size_t>(d * d) * 16);
    bin.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (bin.gcount() != static_cast<std::streamsize>(bytes.size()) || bin.peek() != EOF) {
      throw InvalidArgument("state binary size does not match the sidecar dimension");
    }
    CMatrix m(d, d);
    const unsigned char* p = bytes.data();
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c, p += 16) m(r, c) = Complex(get_le(p), get_le(p + 8));
    }
    StoredState out{DensityMatrix(spec, std::move(m), meta.value("leakage", 0.0)), std::nullopt, std::nullopt};
    if (meta.contains("state")) out.kind = kind_from_json(meta.at("state"));
    if (meta.contains("analytic")) out.analytic = params_from_json(meta.at("analytic"));
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed state sidecar: ") + e.what());
  }
}

}  // namespace gaussfock::cli
