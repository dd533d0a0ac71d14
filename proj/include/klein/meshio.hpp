#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "klein/embed.hpp"

namespace klein {

/// nOFF writer for arbitrary-dimension meshes. Layout: header line "nOFF",
/// the ambient dimension, a "V E T" count line, one coordinate line per
/// vertex (17 significant digits), and face lines "3 i j k".
void write_noff(std::ostream& os, const EmbeddedMesh& mesh, int edgeCount);

/// Standard 3D OFF with the same count-line convention.
void write_off3d(std::ostream& os, const EmbeddedMesh& mesh, int edgeCount);

/// Coordinate selection for 3D export.
EmbeddedMesh project_axes(const EmbeddedMesh& mesh, int i, int j, int k);

/// Projection onto the top three principal components, with a deterministic
/// sign convention (largest-magnitude coefficient positive).
EmbeddedMesh project_pca(const EmbeddedMesh& mesh);

nlohmann::json mesh_to_json(const EmbeddedMesh& mesh);

} // namespace klein
