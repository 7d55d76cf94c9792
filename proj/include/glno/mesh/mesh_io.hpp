#pragma once

#include "glno/mesh/mesh.hpp"

namespace glno::mesh {

/// ASCII OFF reader/writer.
TriangleMesh load_off(const std::string& path);
void save_off(const std::string& path, const TriangleMesh& mesh);

/// ASCII OBJ reader (v/f records only; 1-based indices converted).
TriangleMesh load_obj(const std::string& path);

/// Dispatch on extension (.off / .obj).
TriangleMesh load_mesh(const std::string& path);

} // namespace glno::mesh
