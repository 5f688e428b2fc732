#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "exobasis/admissibility.hpp"
#include "exobasis/basis.hpp"
#include "exobasis/multitile.hpp"
#include "exobasis/oracle.hpp"

namespace exobasis {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "exobasis/1";

/// Parses a JSON document; wraps parse failures into InputError carrying
/// nlohmann's line/column diagnostics.
Json parse_document(const std::string& text);

/// "%.12g".
std::string fmt12(double x);
/// A JSON number rounded through fmt12, so emitted documents are
/// byte-stable and carry 12 significant digits.
Json num12(double x);

Json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const Json& j);

Json region_to_json(const UnitRegion& r);
/// Dimension is inferred from the first box; empty box lists are rejected.
UnitRegion region_from_json(const Json& j);

Json multitile_to_json(const MultiTileSet& s); // stamped with kSchemaTag
MultiTileSet multitile_from_json(const Json& j);

Json certificate_to_json(const AdmissibilityCertificate& c);
AdmissibilityCertificate certificate_from_json(const Json& j);

Json partition_to_json(const FiberPartition& P);
Json bounds_to_json(const BoundsReport& r);
Json violation_to_json(const Violation& v);

/// One row per class: residues, eig_min, eig_max.
void bounds_to_csv(const BoundsReport& r, std::ostream& os);
/// One row per trial quotient.
void quotients_to_csv(const std::vector<double>& quotients, std::ostream& os);

} // namespace exobasis
