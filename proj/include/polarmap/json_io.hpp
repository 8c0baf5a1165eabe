#ifndef POLARMAP_JSON_IO_HPP
#define POLARMAP_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "polarmap/qmaps.hpp"

namespace polarmap {

// On-disk matrix document: {"kind": ..., "data": nested arrays}, complex
// scalars encoded as [re, im], real kinds as plain numbers.
enum class DocKind { jones, mueller_std, mueller_real, density1, density2 };

const char* to_string(DocKind k);
DocKind dockind_from_string(const std::string& s);

struct MatrixDocument {
  DocKind kind = DocKind::jones;
  std::variant<JonesMatrix, MuellerStd, MuellerReal, DensityMatrix1, DensityMatrix2> value;
};

// Throws ValidationError on shape mismatch, non-finite values, imaginary
// residue on real kinds, or invalid density matrices.
MatrixDocument parse_matrix(const nlohmann::json& doc);
MatrixDocument parse_matrix_file(const std::string& path);

nlohmann::json serialize(const JonesMatrix& t);
nlohmann::json serialize(const MuellerStd& m);
nlohmann::json serialize(const MuellerReal& m);
nlohmann::json serialize(const DensityMatrix1& r);
nlohmann::json serialize(const DensityMatrix2& r);

nlohmann::json complex_to_json(const cplx& z);

// Shortest-roundtrip decimal encoding, '.' decimal point; shared by the
// JSON and CSV emitters so goldens stay stable.
std::string format_double(double v);

}  // namespace polarmap

#endif
