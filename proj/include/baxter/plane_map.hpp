#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace baxter {

// Combinatorial embedded multigraph given as a rotation system.
//
// Darts (half-edges) are signed edge ids: +e is the tail half-edge of edge e
// (outgoing at the tail vertex), -e the head half-edge (incoming at the head
// vertex). Edge ids are 1-based, vertex ids 0-based. Every rotation list is
// CLOCKWISE as drawn in standard mathematical orientation (y-axis up); this
// is the single global embedding convention, and every geometric import
// converts into it.
//
// The face lying to the LEFT of a dart d (walking from the dart's vertex
// toward the other endpoint) is traced by d -> cw_next(twin(d)). The outer
// face is designated by a dart whose left face-walk is the outer boundary.
//
// With source and sink set, the same structure serves as a plane bipolar
// orientation; validity is checked by validate().
class PlaneMap {
public:
    PlaneMap() = default;

    // Throws std::invalid_argument on structural defects (dart multiplicity,
    // disconnectedness, Euler/genus failure, bad designations).
    PlaneMap(int vertex_count, std::vector<std::vector<int>> rotations,
             int source, int sink, int outer_dart);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return edge_count_; }
    int source() const { return source_; }
    int sink() const { return sink_; }
    int outer_dart() const { return outer_; }
    const std::vector<int>& rotation(int v) const { return rot_[static_cast<size_t>(v)]; }

    int tail(int e) const { return dart_vertex(e); }
    int head(int e) const { return dart_vertex(-e); }
    static int twin(int d) { return -d; }
    int dart_vertex(int d) const;
    int cw_next(int d) const;
    int cw_prev(int d) const;
    // next dart of the face on the left of d
    int face_next(int d) const { return cw_next(-d); }

    // orbit of the face on the left of d, starting at d
    std::vector<int> face_orbit(int d) const;

    bool operator==(const PlaneMap&) const = default;

private:
    int edge_count_ = 0;
    std::vector<std::vector<int>> rot_;
    int source_ = -1;
    int sink_ = -1;
    int outer_ = 0;
    std::vector<int> dart_vertex_;  // dart index -> vertex
    std::vector<int> dart_pos_;     // dart index -> position in rotation list

    static size_t dart_index(int d) {
        return 2 * static_cast<size_t>((d > 0 ? d : -d) - 1) + (d < 0 ? 1 : 0);
    }
};

struct FaceInfo {
    int id = 0;                       // index among bounded faces
    int source = -1;                  // face source vertex
    int sink = -1;                    // face sink vertex
    std::vector<int> left_vertices;   // source-to-sink order
    std::vector<int> right_vertices;  // source-to-sink order
    std::vector<int> darts;           // boundary orbit (face on the left)
};

struct Borders {
    std::vector<int> left_path;    // vertex sequence s..t
    std::vector<int> right_path;   // vertex sequence s..t
    std::vector<int> left_edges;   // edge ids along the left border
    std::vector<int> right_edges;  // edge ids along the right border
    int left_outer_degree = 0;
    int right_outer_degree = 0;
};

// v1 is the source of f1 and a left (ROP) / right (LOP) vertex of f2;
// v2 is the sink of f2 and a right (ROP) / left (LOP) vertex of f1.
struct OrientedPiece {
    int v1 = -1, v2 = -1;
    int f1 = -1, f2 = -1;  // bounded face ids
};

struct RootedMap {
    PlaneMap map;
    int root_dart = 0;  // outer face on its right

    bool operator==(const RootedMap&) const = default;
};

// Empty iff the map is a valid plane bipolar orientation; violations name
// the vertex/edge/face concerned.
std::vector<std::string> validate(const PlaneMap& o);

Borders borders(const PlaneMap& o);
std::pair<int, int> pole_degrees(const PlaneMap& o);
std::vector<FaceInfo> faces(const PlaneMap& o);

PlaneMap mirror(const PlaneMap& o);
PlaneMap dual(const PlaneMap& o);
PlaneMap reverse_all(const PlaneMap& o);

std::vector<OrientedPiece> find_rops(const PlaneMap& o);
std::vector<OrientedPiece> find_lops(const PlaneMap& o);

// Articulation-vertex test on the underlying multigraph.
bool is_separable(const PlaneMap& m);

// All edge-direction assignments of m that validate as bipolar orientations
// with poles (s, t); embedding and outer face are kept fixed.
// Throws std::invalid_argument when edge_count exceeds max_brute_edges.
std::vector<PlaneMap> enumerate_bipolar_orientations(const PlaneMap& m, int s, int t,
                                                     int max_brute_edges = 20);

struct SpTree {
    enum class Kind { Leaf, Series, Parallel };
    Kind kind = Kind::Leaf;
    int edge = 0;                  // Leaf: edge id in the decomposed map
    std::vector<SpTree> children;  // Series: source-to-sink; Parallel: left-to-right

    int leaf_count() const;
};

// Series-parallel decomposition of the bipolar map (directions ignored);
// nullopt iff the map is not series-parallel.
std::optional<SpTree> sp_decompose(const PlaneMap& m);

// Rebuilds the embedded map carrying its unique bipolar orientation.
PlaneMap sp_recompose(const SpTree& t);

// Isomorphism-complete code for a pole- and outer-face-preserving embedded
// oriented map: breadth-first dart relabeling from the first edge of the
// left border via (rotation-successor, twin) moves.
std::string canonical_code(const PlaneMap& o);

// Root-preserving code of the underlying unoriented embedded map.
std::string canonical_code(const RootedMap& m);

// Edge id -> rank in the canonical traversal; equal-ranked edges of two
// orientations with equal codes correspond under the isomorphism.
std::vector<int> canonical_edge_ranks(const PlaneMap& o);

RootedMap add_root_edge(const PlaneMap& m);
PlaneMap remove_root_edge(const RootedMap& m);

// Text format, bit-exact:
//   MAP v1
//   vertices <V>
//   edges <E>
//   rot <vertex-id>: <signed edge ids, clockwise>
//   source <vertex-id>
//   sink <vertex-id>
//   outer <signed edge id>@<vertex-id>
// Parse errors name line numbers.
PlaneMap parse_map(const std::string& text);
std::string emit_map(const PlaneMap& m);

// DOT digraph; rotation order of each half-edge kept as edge attribute
// "rotpos" (tail position, head position).
std::string map_to_dot(const PlaneMap& m);

}  // namespace baxter
