#include "orient/skeleton.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orient::skel {

namespace {

bool face_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool covered(const SubcomplexSelection& sel, const Face& f) {
    return std::any_of(sel.faces.begin(), sel.faces.end(),
                       [&](const Face& s) { return face_subset(f, s); });
}

} // namespace

SimplicialComplex SimplicialComplex::from_labels(
    const std::vector<std::vector<std::string>>& simplices) {
    SimplicialComplex k;
    std::set<std::string> label_set;
    for (const auto& s : simplices)
        for (const auto& l : s) {
            if (l.empty()) throw ShapeError("empty vertex label");
            if (l.find_first_of(" \t\n#") != std::string::npos)
                throw ShapeError("vertex label '" + l + "' breaks the text format");
            label_set.insert(l);
        }
    k.labels_.assign(label_set.begin(), label_set.end());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < k.labels_.size(); ++i) index[k.labels_[i]] = int(i);

    std::set<Face> faces;
    for (const auto& s : simplices) {
        Face f;
        for (const auto& l : s) f.push_back(index.at(l));
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw ShapeError("simplex with a repeated vertex");
        if (!f.empty()) faces.insert(std::move(f));
    }
    for (const auto& f : faces) {
        bool maximal = std::none_of(faces.begin(), faces.end(), [&](const Face& g) {
            return g.size() > f.size() && face_subset(f, g);
        });
        if (maximal) k.maximal_.push_back(f);
    }
    if (k.maximal_.empty()) throw ShapeError("complex has no simplices");
    k.dimension_ = 0;
    for (const auto& f : k.maximal_) k.dimension_ = std::max(k.dimension_, int(f.size()) - 1);
    k.pure_ = std::all_of(k.maximal_.begin(), k.maximal_.end(), [&](const Face& f) {
        return int(f.size()) - 1 == k.dimension_;
    });
    return k;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face> faces;
    for (const auto& m : maximal_) {
        const std::size_t s = m.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << s); ++mask) {
            Face f;
            for (std::size_t b = 0; b < s; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(m[b]);
            faces.insert(std::move(f));
        }
    }
    std::vector<Face> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int d) const {
    std::vector<Face> out;
    for (const auto& f : all_faces())
        if (int(f.size()) - 1 == d) out.push_back(f);
    return out;
}

long SimplicialComplex::face_count(int d) const {
    return long(faces_of_dimension(d).size());
}

mpz_class SimplicialComplex::euler_characteristic() const {
    mpz_class chi = 0;
    for (const auto& f : all_faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

std::string SimplicialComplex::face_label(const Face& f, const std::string& sep) const {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += sep;
        out += labels_[std::size_t(f[i])];
    }
    return out;
}

SimplicialComplex read_complex(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_complex(text);
}

SimplicialComplex parse_complex(const std::string& text) {
    std::vector<std::vector<std::string>> simplices;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> labels;
        std::string token;
        while (ls >> token) {
            if (token.find('|') != std::string::npos)
                throw ParseError("vertex label may not contain '|'", line_no,
                                 int(line.find(token)) + 1);
            labels.push_back(token);
        }
        if (labels.empty()) continue;
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw ParseError("repeated vertex in simplex", line_no, 1);
        simplices.push_back(std::move(labels));
    }
    if (simplices.empty()) throw ParseError("no simplices in input", line_no, 1);
    return SimplicialComplex::from_labels(simplices);
}

std::string write_complex(const SimplicialComplex& k) {
    std::ostringstream os;
    for (const auto& f : k.maximal_simplices()) os << k.face_label(f, " ") << "\n";
    return os.str();
}

bool SubcomplexSelection::contains(const Face& f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

long SubcomplexSelection::count_of_dimension(int d) const {
    return long(std::count_if(faces.begin(), faces.end(), [&](const Face& f) {
        return int(f.size()) - 1 == d;
    }));
}

std::set<int> SubcomplexSelection::vertex_set() const {
    std::set<int> out;
    for (const auto& f : faces) out.insert(f.begin(), f.end());
    return out;
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
    auto faces = k.all_faces();
    std::map<Face, std::string> barycentre_label;
    std::set<std::string> distinct;
    for (const auto& f : faces) {
        std::string l = k.face_label(f);
        barycentre_label[f] = l;
        distinct.insert(l);
    }
    if (distinct.size() != faces.size())
        throw InconsistencyError("barycentre labels collide; vertex labels are too ambiguous");

    std::vector<std::vector<std::string>> cells;
    for (const auto& m : k.maximal_simplices()) {
        Face perm = m;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<std::string> flag;
            Face partial;
            for (int v : perm) {
                partial.push_back(v);
                Face sorted = partial;
                std::sort(sorted.begin(), sorted.end());
                flag.push_back(barycentre_label.at(sorted));
            }
            cells.push_back(std::move(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    BarycentricSubdivision out{SimplicialComplex::from_labels(cells), {}};
    std::map<std::string, Face> face_of_label;
    for (const auto& [f, l] : barycentre_label) face_of_label[l] = f;
    for (const auto& l : out.complex.vertex_labels())
        out.barycentre_of.push_back(face_of_label.at(l));
    return out;
}

SubcomplexSelection relative_skeleton(const SimplicialComplex& k, int d,
                                      const std::optional<SubcomplexSelection>& boundary) {
    if (d < 0 || d > k.dimension())
        throw RangeError("skeleton dimension " + std::to_string(d) + " outside [0, " +
                         std::to_string(k.dimension()) + "]");
    SubcomplexSelection out;
    for (const auto& f : k.all_faces()) {
        int fd = int(f.size()) - 1;
        if (fd > d) continue;
        if (fd == d && boundary && covered(*boundary, f)) continue;
        out.faces.push_back(f);
    }
    std::sort(out.faces.begin(), out.faces.end());
    return out;
}

SubcomplexSelection dual_skeleton(const BarycentricSubdivision& subdivision, int d) {
    const SimplicialComplex& sub = subdivision.complex;
    if (!sub.pure()) throw PurityError("dual skeleton requires a pure complex");
    const int n = sub.dimension();
    if (d < 1 || d > n)
        throw RangeError("dual parameter " + std::to_string(d) + " outside [1, " +
                         std::to_string(n) + "]");
    SubcomplexSelection out;
    for (const auto& f : sub.all_faces()) {
        bool inside = std::all_of(f.begin(), f.end(), [&](int v) {
            return subdivision.face_dimension(v) >= n - d + 1;
        });
        if (inside) out.faces.push_back(f);
    }
    std::sort(out.faces.begin(), out.faces.end());
    return out;
}

SubcomplexSelection embed_in_subdivision(const BarycentricSubdivision& subdivision,
                                         const SubcomplexSelection& selection) {
    SubcomplexSelection out;
    for (const auto& f : subdivision.complex.all_faces()) {
        bool inside = std::all_of(f.begin(), f.end(), [&](int v) {
            return covered(selection, subdivision.barycentre_of[std::size_t(v)]);
        });
        if (inside) out.faces.push_back(f);
    }
    std::sort(out.faces.begin(), out.faces.end());
    return out;
}

long dual_cell_count(const SimplicialComplex& k, int dual_dim) {
    if (!k.pure()) throw PurityError("dual cells require a pure complex");
    return k.face_count(k.dimension() - dual_dim);
}

SimplicialComplex prism_triangulation(const SimplicialComplex& k) {
    if (!k.pure()) throw PurityError("prism triangulation requires a pure complex");
    std::vector<std::vector<std::string>> cells;
    for (const auto& m : k.maximal_simplices()) {
        const std::size_t s = m.size();
        // staircase: bottom prefix v_0..v_i, top suffix v_i..v_n
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<std::string> cell;
            for (std::size_t b = 0; b <= i; ++b) cell.push_back(k.label(m[b]) + "_0");
            for (std::size_t t = i; t < s; ++t) cell.push_back(k.label(m[t]) + "_1");
            cells.push_back(std::move(cell));
        }
    }
    return SimplicialComplex::from_labels(cells);
}

SimplicialComplex prism_end(const SimplicialComplex& prism, int end) {
    if (end != 0 && end != 1) throw RangeError("prism end must be 0 or 1");
    const std::string suffix = end == 0 ? "_0" : "_1";
    std::vector<std::vector<std::string>> restricted;
    for (const auto& m : prism.maximal_simplices()) {
        std::vector<std::string> cell;
        for (int v : m) {
            const std::string& l = prism.label(v);
            if (l.size() >= suffix.size() &&
                l.compare(l.size() - suffix.size(), suffix.size(), suffix) == 0)
                cell.push_back(l.substr(0, l.size() - suffix.size()));
        }
        if (!cell.empty()) restricted.push_back(std::move(cell));
    }
    return SimplicialComplex::from_labels(restricted);
}

} // namespace orient::skel

namespace orient::skel::library {

namespace {

std::vector<std::string> ring(const std::string& prefix, int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

SimplicialComplex triangle() {
    return SimplicialComplex::from_labels({{"1", "2", "3"}});
}

SimplicialComplex octahedron() {
    return SimplicialComplex::from_labels({
        {"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "2"},
        {"6", "2", "3"}, {"6", "3", "4"}, {"6", "4", "5"}, {"6", "5", "2"},
    });
}

SimplicialComplex icosahedron() {
    auto b = ring("b", 5), c = ring("c", 5);
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        faces.push_back({"a", b[i], b[j]});
        faces.push_back({"d", c[i], c[j]});
        faces.push_back({b[i], b[j], c[i]});
        faces.push_back({b[j], c[i], c[j]});
    }
    return SimplicialComplex::from_labels(faces);
}

SimplicialComplex boundary_4_simplex() {
    std::vector<std::vector<std::string>> faces;
    std::vector<std::string> v{"1", "2", "3", "4", "5"};
    for (int skip = 0; skip < 5; ++skip) {
        std::vector<std::string> f;
        for (int i = 0; i < 5; ++i)
            if (i != skip) f.push_back(v[std::size_t(i)]);
        faces.push_back(f);
    }
    return SimplicialComplex::from_labels(faces);
}

SimplicialComplex torus_18() {
    auto v = [](int i, int j) {
        return "v" + std::to_string((i + 3) % 3) + std::to_string((j + 3) % 3);
    };
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            faces.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
        }
    return SimplicialComplex::from_labels(faces);
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> list = {"triangle", "octahedron", "icosahedron",
                                                  "boundary-4-simplex", "torus-18"};
    return list;
}

SimplicialComplex by_name(const std::string& name) {
    if (name == "triangle") return triangle();
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "boundary-4-simplex") return boundary_4_simplex();
    if (name == "torus-18") return torus_18();
    throw UnsupportedModelError("unknown library complex '" + name + "'");
}

} // namespace orient::skel::library
