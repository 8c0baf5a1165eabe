#include "polarmap/json_io.hpp"

#include <cmath>
#include <fstream>

namespace polarmap {

using nlohmann::json;

const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::jones: return "jones";
    case DocKind::mueller_std: return "mueller_std";
    case DocKind::mueller_real: return "mueller_real";
    case DocKind::density1: return "density1";
    default: return "density2";
  }
}

DocKind dockind_from_string(const std::string& s) {
  if (s == "jones") return DocKind::jones;
  if (s == "mueller_std") return DocKind::mueller_std;
  if (s == "mueller_real") return DocKind::mueller_real;
  if (s == "density1") return DocKind::density1;
  if (s == "density2") return DocKind::density2;
  throw ValidationError("unknown matrix kind '" + s + "'");
}

namespace {

cplx parse_complex(const json& cell) {
  if (cell.is_number()) {
    const double v = cell.get<double>();
    if (!std::isfinite(v)) throw ValidationError("non-finite value in matrix data");
    return {v, 0.0};
  }
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
    throw ValidationError("complex scalar must be a [re, im] pair");
  const cplx z{cell[0].get<double>(), cell[1].get<double>()};
  if (!is_finite(z)) throw ValidationError("non-finite value in matrix data");
  return z;
}

double parse_real(const json& cell) {
  const cplx z = parse_complex(cell);
  if (std::abs(z.imag()) > 1e-12)
    throw ValidationError("real matrix kind has a nonzero imaginary part");
  return z.real();
}

template <int N>
CMatrix<N> parse_cmatrix(const json& data) {
  if (!data.is_array() || data.size() != N)
    throw ValidationError("matrix data must have " + std::to_string(N) + " rows");
  CMatrix<N> out;
  for (int r = 0; r < N; ++r) {
    const json& row = data[r];
    if (!row.is_array() || row.size() != N)
      throw ValidationError("matrix row must have " + std::to_string(N) + " entries");
    for (int c = 0; c < N; ++c) out(r, c) = parse_complex(row[c]);
  }
  return out;
}

RMat4 parse_rmatrix4(const json& data) {
  if (!data.is_array() || data.size() != 4) throw ValidationError("matrix data must have 4 rows");
  RMat4 out;
  for (int r = 0; r < 4; ++r) {
    const json& row = data[r];
    if (!row.is_array() || row.size() != 4)
      throw ValidationError("matrix row must have 4 entries");
    for (int c = 0; c < 4; ++c) out(r, c) = parse_real(row[c]);
  }
  return out;
}

template <int N>
json dump_cmatrix(const CMatrix<N>& m) {
  json rows = json::array();
  for (int r = 0; r < N; ++r) {
    json row = json::array();
    for (int c = 0; c < N; ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json make_doc(DocKind kind, json data) {
  return json{{"kind", to_string(kind)}, {"data", std::move(data)}};
}

}  // namespace

MatrixDocument parse_matrix(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("data"))
    throw ValidationError("matrix document needs 'kind' and 'data' fields");
  MatrixDocument out;
  out.kind = dockind_from_string(doc["kind"].get<std::string>());
  const json& data = doc["data"];
  switch (out.kind) {
    case DocKind::jones:
      out.value = JonesMatrix{parse_cmatrix<2>(data)};
      break;
    case DocKind::mueller_std:
      out.value = MuellerStd{parse_cmatrix<4>(data)};
      break;
    case DocKind::mueller_real: {
      MuellerReal m;
      m.m = parse_rmatrix4(data);
      out.value = m;
      break;
    }
    case DocKind::density1:
      out.value = DensityMatrix1::checked(parse_cmatrix<2>(data));
      break;
    case DocKind::density2:
      out.value = DensityMatrix2::checked(parse_cmatrix<4>(data));
      break;
  }
  return out;
}

MatrixDocument parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError("cannot open file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_matrix(doc);
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json serialize(const JonesMatrix& t) { return make_doc(DocKind::jones, dump_cmatrix(t.t)); }

json serialize(const MuellerStd& m) { return make_doc(DocKind::mueller_std, dump_cmatrix(m.m)); }

json serialize(const MuellerReal& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m.m(r, c));
    rows.push_back(row);
  }
  return make_doc(DocKind::mueller_real, std::move(rows));
}

json serialize(const DensityMatrix1& r) { return make_doc(DocKind::density1, dump_cmatrix(r.r)); }

json serialize(const DensityMatrix2& r) { return make_doc(DocKind::density2, dump_cmatrix(r.r)); }

std::string format_double(double v) { return json(v).dump(); }

}  // namespace polarmap
