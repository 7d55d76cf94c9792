#include "glno/mesh/mesh_io.hpp"

#include <fstream>
#include <sstream>

#include "glno/util/error.hpp"

namespace glno::mesh {

namespace {
// Next non-empty, non-comment line ('#' comments).
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size()) return true;
    }
    return false;
}
} // namespace

TriangleMesh load_off(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open mesh: ", path);
    std::string line;
    require(next_line(in, line), "OFF: empty file: ", path);
    {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        require(tag == "OFF", "OFF: missing header in ", path);
    }
    require(next_line(in, line), "OFF: missing counts: ", path);
    std::size_t nv = 0, nf = 0, ne = 0;
    {
        std::istringstream ss(line);
        ss >> nv >> nf >> ne;
        require(!ss.fail(), "OFF: bad counts line: ", path);
    }
    TriangleMesh mesh;
    mesh.vertices.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        require(next_line(in, line), "OFF: truncated vertices: ", path);
        std::istringstream ss(line);
        double x, y, z;
        ss >> x >> y >> z;
        require(!ss.fail(), "OFF: bad vertex line ", i, ": ", path);
        mesh.vertices.emplace_back(x, y, z);
    }
    mesh.faces.reserve(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        require(next_line(in, line), "OFF: truncated faces: ", path);
        std::istringstream ss(line);
        int cnt, a, b, c;
        ss >> cnt >> a >> b >> c;
        require(!ss.fail() && cnt == 3, "OFF: face ", i, " is not a triangle: ", path);
        mesh.faces.push_back({a, b, c});
    }
    mesh.validate();
    return mesh;
}

void save_off(const std::string& path, const TriangleMesh& mesh) {
    std::ofstream out(path);
    require(out.good(), "cannot open for write: ", path);
    out << "OFF\n" << mesh.vertex_count() << " " << mesh.face_count() << " 0\n";
    out.precision(17);
    for (const auto& v : mesh.vertices) out << v.x() << " " << v.y() << " " << v.z() << "\n";
    for (const auto& f : mesh.faces) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
    require(out.good(), "write failed: ", path);
}

TriangleMesh load_obj(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open mesh: ", path);
    TriangleMesh mesh;
    std::string line;
    while (next_line(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "v") {
            double x, y, z;
            ss >> x >> y >> z;
            require(!ss.fail(), "OBJ: bad vertex line: ", path);
            mesh.vertices.emplace_back(x, y, z);
        } else if (tag == "f") {
            std::array<int, 3> tri{};
            for (int e = 0; e < 3; ++e) {
                std::string tok;
                ss >> tok;
                require(!ss.fail(), "OBJ: face is not a triangle: ", path);
                // "v", "v/vt", "v/vt/vn", "v//vn" forms; index before first '/'
                tri[e] = std::stoi(tok.substr(0, tok.find('/'))) - 1;
            }
            std::string extra;
            require(!(ss >> extra), "OBJ: face with more than 3 vertices: ", path);
            mesh.faces.push_back(tri);
        }
    }
    mesh.validate();
    return mesh;
}

TriangleMesh load_mesh(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "off" || ext == "OFF") return load_off(path);
    if (ext == "obj" || ext == "OBJ") return load_obj(path);
    fail("unknown mesh extension: ", path);
}

} // namespace glno::mesh
