#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetfol/cdga.hpp"
#include "jetfol/charvar.hpp"
#include "jetfol/obstruction.hpp"

namespace jetfol::io {

/// Objects keep their keys sorted, so dumps are canonical.
using Json = nlohmann::json;

/// Malformed input. `where` is a JSON-pointer-like path such as $.images.a1.components[0][1].coeff.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json read_json_file(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

Json to_json(const Scalar& s);
/// Accepts "p/q" or decimal strings, and JSON integers.
Scalar scalar_from_json(const Json& j, Field f, const std::string& where);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, Field f, const std::string& where);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Field f, const std::string& where);

Json to_json(const JetMap& m);
JetMap jetmap_from_json(const Json& j, const std::string& where = "$");
JetDiffeo jetdiffeo_from_json(const Json& j, const std::string& where = "$");

Json to_json(const PolyVector& v);
PolyVector polyvector_from_json(const Json& j, const std::string& where = "$");

Json to_json(const LevyCoords& c);
LevyCoords levy_from_json(const Json& j, const std::string& where = "$");

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j, const std::string& where = "$");
/// Builtin name (circle, torus, surface:g, heisenberg) or a path to a presentation file.
Presentation resolve_presentation(const std::string& spec, const std::filesystem::path& base_dir = {});

Json to_json(const Representation& r);
/// Presentation and generator images before the relators are checked.
struct RepresentationInput {
  Presentation presentation;
  std::vector<JetDiffeo> images;
};
RepresentationInput representation_input_from_json(const Json& j, Field f, const std::filesystem::path& base_dir = {},
                                                   const std::string& where = "$");
/// `field` is used when the document carries no "field" key.
Representation representation_from_json(const Json& j, Field f, const std::filesystem::path& base_dir = {},
                                         const std::string& where = "$");

/// Explicit encoding of every product and differential (unit included).
Json to_json(const CdgaModel& m);
CdgaModel model_from_json(const Json& j, Field f, const std::string& where = "$");

Json to_json(const McData& d, const CdgaModel& m);
McData mcdata_from_json(const Json& j, const CdgaModel& m, const std::string& where = "$");

std::vector<Scalar> rho0_from_json(const Json& j, const Presentation& p, Field f, const std::string& where = "$");

Json to_json(const ValidationReport& r);
Json to_json(const H1Result& h);
Json to_json(const LiftReport& r, const Presentation& p);
Json to_json(const ExtensionSpace& s);
Json to_json(const McReport& r, const CdgaModel& m);
Json to_json(const ExtClass& e, const CdgaModel& m);
Json to_json(const ExactnessVerdict& v, const CdgaModel& m);
Json to_json(const ClassifyReport& r);
Json to_json(const OrbitRepresentative& o);

/// Element written as {"name": coeff} over nonzero basis entries.
Json element_to_json(const CdgaModel& m, const Vector& x);
Vector element_from_json(const CdgaModel& m, const Json& j, const std::string& where);
Json valued_to_json(const CdgaModel& m, const ValuedForm& v);
ValuedForm valued_from_json(const CdgaModel& m, const Json& j, int l, int poly_degree, const std::string& where);

}  // namespace jetfol::io
