#include "bestprox/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <yaml-cpp/yaml.h>

#include "bestprox/error.hpp"
#include "bestprox/gallery.hpp"

namespace bestprox {

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& node, const std::string& message) const {
        const auto mark = node.Mark();
        const int line = mark.line >= 0 ? mark.line + 1 : 1;
        const int column = mark.column >= 0 ? mark.column + 1 : 1;
        throw ParseError(source_, line, column, message);
    }

    double number(const YAML::Node& node, const std::string& what) const {
        if (!node.IsScalar()) fail(node, what + " must be a number");
        const std::string& text = node.Scalar();
        double value = 0.0;
        const char* begin = text.data();
        const char* end = text.data() + text.size();
        if (begin != end && *begin == '+') ++begin;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
            fail(node, what + " must be a finite decimal literal, got '" + text + "'");
        }
        return value;
    }

    std::string label(const YAML::Node& node, const std::string& what) const {
        if (!node.IsScalar() || node.Scalar().empty()) fail(node, what + " must be a non-empty label");
        return node.Scalar();
    }

    /// The key node of `key` in `map`, for diagnostics about a whole section.
    static YAML::Node key_of(const YAML::Node& map, const std::string& key) {
        for (const auto& entry : map) {
            if (entry.first.Scalar() == key) return entry.first;
        }
        return map;
    }

    const YAML::Node& require_sequence(const YAML::Node& node, const std::string& what) const {
        if (!node.IsSequence()) fail(node, what + " must be a list");
        return node;
    }

private:
    std::string source_;
};

PointId lookup(const Reader& rd, const FiniteMetricSpace& space, const YAML::Node& node, const std::string& what) {
    const auto name = rd.label(node, what);
    auto p = space.find(name);
    if (!p) rd.fail(node, what + " refers to unknown point '" + name + "'");
    return *p;
}

PointSet read_subset(const Reader& rd, const FiniteMetricSpace& space, const YAML::Node& node,
                     const std::string& key) {
    rd.require_sequence(node, key);
    if (node.size() == 0) rd.fail(node, key + " must be nonempty");
    std::vector<PointId> members;
    std::set<PointId> seen;
    for (const auto& item : node) {
        const PointId p = lookup(rd, space, item, key + " entry");
        if (!seen.insert(p).second) rd.fail(item, key + " lists '" + space.label(p) + "' twice");
        members.push_back(p);
    }
    return PointSet(space.size(), std::move(members));
}

PointMap read_map(const Reader& rd, const FiniteMetricSpace& space, const YAML::Node& node, const std::string& key,
                  const PointSet& s1, const PointSet& s2) {
    if (!node.IsMap()) rd.fail(node, key + " must be a mapping from S1 labels to S2 labels");
    PointMap map(space.size());
    for (const auto& entry : node) {
        const PointId from = lookup(rd, space, entry.first, key + " key");
        const PointId to = lookup(rd, space, entry.second, key + " value");
        if (!s1.contains(from)) rd.fail(entry.first, key + " key '" + space.label(from) + "' is not in s1");
        if (!s2.contains(to)) rd.fail(entry.second, key + " image '" + space.label(to) + "' is not in s2");
        if (map.defined(from)) rd.fail(entry.first, key + " defines '" + space.label(from) + "' twice");
        map.set(from, to);
    }
    for (PointId p : s1.members()) {
        if (!map.defined(p)) rd.fail(node, key + " has no image for s1 point '" + space.label(p) + "'");
    }
    return map;
}

std::optional<FFunction> read_f(const Reader& rd, const YAML::Node& root) {
    const auto node = root["f"];
    if (!node) return std::nullopt;
    double k = 0.5;
    if (const auto kn = root["f_k"]) k = rd.number(kn, "f_k");
    try {
        if (node.IsScalar()) {
            auto f = FFunction::from_name(node.Scalar());
            return root["f_k"] ? f.with_exponent(k) : f;
        }
        rd.require_sequence(node, "f");
        std::vector<FFunction::Sample> table;
        for (const auto& pair : node) {
            if (!pair.IsSequence() || pair.size() != 2) rd.fail(pair, "f table entries must be [alpha, F(alpha)]");
            table.push_back({rd.number(pair[0], "alpha"), rd.number(pair[1], "F(alpha)")});
        }
        return FFunction::custom(std::move(table), k);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        rd.fail(node, e.what());
    }
}

const std::set<std::string> kKnownKeys = {"name", "discretized", "points", "distances", "s1", "s2", "phi",
                                          "psi",  "tol_eq",      "tol_conv", "f", "f_k"};

}  // namespace

ProblemDocument parse_problem(std::string_view text, const std::string& source) {
    const Reader rd(source);
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ParseError(source, e.mark.line + 1, e.mark.column + 1, e.msg);
    }
    if (!root.IsMap()) rd.fail(root, "problem file must be a mapping");
    for (const auto& entry : root) {
        const auto key = entry.first.as<std::string>();
        if (!kKnownKeys.contains(key)) rd.fail(entry.first, "unknown key '" + key + "'");
    }
    for (const char* key : {"points", "s1", "s2", "phi", "psi"}) {
        if (!root[key]) rd.fail(root, std::string("missing required key '") + key + "'");
    }

    std::string name = root["name"] ? root["name"].as<std::string>() : "";
    bool discretized = false;
    if (const auto node = root["discretized"]) {
        const auto& s = node.Scalar();
        if (s == "true") discretized = true;
        else if (s != "false") rd.fail(node, "discretized must be true or false");
    }

    // points
    const auto points = rd.require_sequence(root["points"], "points");
    if (points.size() == 0) rd.fail(points, "points must be nonempty");
    std::vector<std::string> labels;
    std::vector<std::vector<double>> coords;
    std::unordered_map<std::string, int> seen;
    const bool coordinate_form = points[0].IsMap();
    for (const auto& item : points) {
        std::string lab;
        if (coordinate_form) {
            if (!item.IsMap() || !item["label"] || !item["at"]) {
                rd.fail(item, "coordinate points need {label: ..., at: [...]} (forms cannot be mixed)");
            }
            lab = rd.label(item["label"], "point label");
            const auto at = rd.require_sequence(item["at"], "point coordinates");
            std::vector<double> c;
            for (const auto& v : at) c.push_back(rd.number(v, "coordinate"));
            if (c.empty()) rd.fail(at, "coordinate tuple must be nonempty");
            if (!coords.empty() && c.size() != coords.front().size()) {
                rd.fail(at, "coordinate tuples must share one dimension");
            }
            coords.push_back(std::move(c));
        } else {
            if (!item.IsScalar()) rd.fail(item, "point entries must be labels (forms cannot be mixed)");
            lab = rd.label(item, "point label");
        }
        if (!seen.emplace(lab, 0).second) rd.fail(item, "duplicate point label '" + lab + "'");
        labels.push_back(std::move(lab));
    }

    std::optional<FiniteMetricSpace> space;
    try {
        if (coordinate_form) {
            if (root["distances"]) rd.fail(root["distances"], "distances given alongside coordinate points");
            space = FiniteMetricSpace::from_coordinates(labels, coords);
        } else {
            if (!root["distances"]) rd.fail(points, "label-only points need a 'distances' table");
            const auto rows = rd.require_sequence(root["distances"], "distances");
            if (rows.size() + 1 != labels.size()) {
                rd.fail(rows, "distances needs " + std::to_string(labels.size() - 1) + " rows, got " +
                                  std::to_string(rows.size()));
            }
            std::vector<std::vector<double>> table;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const auto row = rd.require_sequence(rows[k], "distance row");
                if (row.size() != k + 1) {
                    rd.fail(rows[k], "distance row for '" + labels[k + 1] + "' needs " + std::to_string(k + 1) +
                                         " entries");
                }
                std::vector<double> values;
                for (const auto& v : row) {
                    const double d = rd.number(v, "distance");
                    if (d < 0.0) rd.fail(v, "distance must be non-negative");
                    values.push_back(d);
                }
                table.push_back(std::move(values));
            }
            space = FiniteMetricSpace::from_lower_triangle(labels, table);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        rd.fail(Reader::key_of(root, coordinate_form ? "points" : "distances"), e.what());
    }

    PointSet s1 = read_subset(rd, *space, root["s1"], "s1");
    PointSet s2 = read_subset(rd, *space, root["s2"], "s2");
    PointMap phi = read_map(rd, *space, root["phi"], "phi", s1, s2);
    PointMap psi = read_map(rd, *space, root["psi"], "psi", s1, s2);

    Tolerances tol;
    if (const auto n = root["tol_eq"]) {
        tol.eq = rd.number(n, "tol_eq");
        if (tol.eq < 0.0) rd.fail(n, "tol_eq must be non-negative");
    }
    if (const auto n = root["tol_conv"]) {
        tol.conv = rd.number(n, "tol_conv");
        if (!(tol.conv > 0.0)) rd.fail(n, "tol_conv must be positive");
    }
    auto f = read_f(rd, root);

    try {
        ProximityProblem problem(std::move(*space), {std::move(s1), std::move(s2)}, {std::move(phi), std::move(psi)},
                                 tol, discretized);
        return {std::move(name), std::move(problem), std::move(f)};
    } catch (const Error& e) {
        rd.fail(root["tol_eq"] ? root["tol_eq"] : Reader::key_of(root, "s1"), e.what());
    }
}

ProblemDocument load_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 1, 1, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str(), path.string());
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (static_cast<unsigned char>(c) < 0x20) {
            throw Error(ErrorCode::InvalidArgument, "labels must not contain control characters");
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

void write_labels(std::ostream& os, const FiniteMetricSpace& space, std::span<const PointId> ids) {
    os << '[';
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << quote(space.label(ids[i]));
    os << "]\n";
}

void write_map(std::ostream& os, const FiniteMetricSpace& space, const PointSet& s1, const PointMap& map) {
    for (PointId p : s1.members()) os << "  " << quote(space.label(p)) << ": " << quote(space.label(map(p))) << '\n';
}

}  // namespace

std::string write_problem(const ProximityProblem& problem, std::string_view name, const std::optional<FFunction>& f) {
    using gallery::format_number;
    const auto& space = problem.space();
    std::ostringstream os;
    os << "# bestprox problem file\n";
    if (!name.empty()) os << "name: " << quote(std::string(name)) << '\n';
    os << "discretized: " << (problem.discretized() ? "true" : "false") << '\n';
    os << "points:\n";
    for (const auto& lab : space.labels()) os << "  - " << quote(lab) << '\n';
    if (space.size() > 1) {
        os << "distances:\n";
        for (PointId k = 1; k < space.size(); ++k) {
            os << "  - [";
            for (PointId j = 0; j < k; ++j) os << (j ? ", " : "") << format_number(space(k, j));
            os << "]\n";
        }
    } else {
        os << "distances: []\n";
    }
    os << "s1: ";
    write_labels(os, space, problem.s1().members());
    os << "s2: ";
    write_labels(os, space, problem.s2().members());
    os << "phi:\n";
    write_map(os, space, problem.s1(), problem.phi());
    os << "psi:\n";
    write_map(os, space, problem.s1(), problem.psi());
    os << "tol_eq: " << format_number(problem.tol_eq()) << '\n';
    os << "tol_conv: " << format_number(problem.tol_conv()) << '\n';
    if (f) {
        if (f->kind() == FKind::CustomTable) {
            os << "f: [";
            bool first = true;
            for (const auto& s : f->table()) {
                os << (first ? "" : ", ") << '[' << format_number(s.alpha) << ", " << format_number(s.value) << ']';
                first = false;
            }
            os << "]\n";
        } else {
            os << "f: " << f->name() << '\n';
        }
        os << "f_k: " << format_number(f->k_exponent()) << '\n';
    }
    return os.str();
}

}  // namespace bestprox
