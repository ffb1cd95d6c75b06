#include "eqcell/document.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace eqcell {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing key '") + key + "'");
  return *it;
}

void expect(const json& j, json::value_t type, const std::string& path) {
  const bool ok = type == json::value_t::number_integer
                      ? (j.is_number_integer())
                      : j.type() == type;
  if (!ok) {
    const char* expected = "value";
    switch (type) {
      case json::value_t::object: expected = "an object"; break;
      case json::value_t::array: expected = "an array"; break;
      case json::value_t::string: expected = "a string"; break;
      case json::value_t::number_integer: expected = "an integer"; break;
      default: break;
    }
    schema_error(path, std::string("expected ") + expected + ", found " + j.type_name());
  }
}

std::string as_string(const json& j, const std::string& path) {
  expect(j, json::value_t::string, path);
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  expect(j, json::value_t::array, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string child(const std::string& path, const std::string& key) { return path + "." + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

[[noreturn]] void invalid(const std::string& stage, const std::string& message) {
  throw ValidationError(stage + ": " + message);
}

// --- category ---------------------------------------------------------------

CategorySpec parse_category(const json& j) {
  const std::string path = "category";
  expect(j, json::value_t::object, path);
  CategorySpec spec;
  spec.objects = string_list(member(j, "objects", path), child(path, "objects"));
  if (auto it = j.find("morphisms"); it != j.end()) {
    const std::string mpath = child(path, "morphisms");
    expect(*it, json::value_t::array, mpath);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& m = (*it)[i];
      const std::string p = child(mpath, i);
      expect(m, json::value_t::object, p);
      spec.morphisms.push_back({as_string(member(m, "name", p), child(p, "name")),
                                as_string(member(m, "dom", p), child(p, "dom")),
                                as_string(member(m, "cod", p), child(p, "cod"))});
    }
  }
  if (auto it = j.find("composition"); it != j.end()) {
    const std::string cpath = child(path, "composition");
    expect(*it, json::value_t::array, cpath);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& c = (*it)[i];
      const std::string p = child(cpath, i);
      expect(c, json::value_t::object, p);
      spec.composition.push_back({as_string(member(c, "first", p), child(p, "first")),
                                  as_string(member(c, "second", p), child(p, "second")),
                                  as_string(member(c, "result", p), child(p, "result"))});
    }
  }
  return spec;
}

// --- orbits -----------------------------------------------------------------

std::vector<Orbit> parse_orbits(const json& j, const std::shared_ptr<const FinCategory>& cat) {
  const std::string path = "orbits";
  expect(j, json::value_t::array, path);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& o = j[i];
    const std::string p = child(path, i);
    expect(o, json::value_t::object, p);
    const std::string name = as_string(member(o, "name", p), child(p, "name"));
    if (auto free = o.find("free"); free != o.end()) {
      const std::string object = as_string(*free, child(p, "free"));
      try {
        orbits.push_back(free_orbit(cat, object, name));
      } catch (const ValidationError& e) {
        invalid("orbit '" + name + "'", e.what());
      }
      continue;
    }
    FunctorSpec spec;
    const json& sets = member(o, "sets", p);
    expect(sets, json::value_t::object, child(p, "sets"));
    for (const auto& [object, elements] : sets.items()) {
      spec.sets[object] = string_list(elements, child(child(p, "sets"), object));
    }
    if (auto action = o.find("action"); action != o.end()) {
      const std::string ap = child(p, "action");
      expect(*action, json::value_t::object, ap);
      for (const auto& [morphism, mapping] : action->items()) {
        const std::string mp = child(ap, morphism);
        expect(mapping, json::value_t::object, mp);
        auto& out = spec.action[morphism];
        for (const auto& [x, y] : mapping.items()) out[x] = as_string(y, child(mp, x));
      }
    }
    try {
      orbits.push_back({name, FinFunctor::from_spec(cat, spec)});
    } catch (const ValidationError& e) {
      invalid("orbit '" + name + "'", e.what());
    }
  }
  return orbits;
}

// --- natural transformations ------------------------------------------------

MorId parse_transformation(const json& j, const OrbitCategory& oc, int source, int target,
                           const std::string& path, const std::string& stage) {
  const std::string arrow = oc.orbit_name(source) + " -> " + oc.orbit_name(target);
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "id") {
      if (source != target) invalid(stage, path + ": 'id' used for a map " + arrow);
      return oc.identity(source);
    }
    auto m = oc.find_morphism(name);
    if (!m) invalid(stage, path + ": unknown morphism '" + name + "'");
    if (oc.dom(*m) != source || oc.cod(*m) != target) {
      invalid(stage, path + ": morphism '" + name + "' is not a map " + arrow);
    }
    return *m;
  }
  expect(j, json::value_t::object, path);
  const FinCategory& cat = oc.base();
  const FinFunctor& s = *oc.orbit(source).functor;
  const FinFunctor& t = *oc.orbit(target).functor;
  for (const auto& [object, _] : j.items()) {
    if (!cat.find_object(object)) invalid(stage, path + ": unknown object '" + object + "'");
  }
  std::vector<std::vector<int>> components(cat.object_count());
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    const int obj = static_cast<int>(d);
    const std::string& object = cat.object_name(obj);
    if (s.size(obj) == 0) continue;
    auto it = j.find(object);
    if (it == j.end()) invalid(stage, path + ": no component at object '" + object + "'");
    const std::string op = child(path, object);
    expect(*it, json::value_t::object, op);
    components[d].assign(s.size(obj), -1);
    for (const auto& [x, y] : it->items()) {
      auto xi = s.find_element(obj, x);
      if (!xi) invalid(stage, op + ": '" + x + "' is not an element of " + oc.orbit_name(source) + "(" + object + ")");
      const std::string yname = as_string(y, child(op, x));
      auto yi = t.find_element(obj, yname);
      if (!yi) {
        invalid(stage, op + ": '" + yname + "' is not an element of " + oc.orbit_name(target) + "(" + object + ")");
      }
      components[d][*xi] = *yi;
    }
    for (std::size_t x = 0; x < components[d].size(); ++x) {
      if (components[d][x] < 0) {
        invalid(stage, op + ": element '" + s.elements(obj)[x] + "' is not mapped");
      }
    }
  }
  auto m = oc.find(source, target, components);
  if (!m) invalid(stage, path + ": not a natural transformation " + arrow);
  return *m;
}

ordered_json write_transformation(const OrbitCategory& oc, MorId m) {
  const FinCategory& cat = oc.base();
  const FinFunctor& s = *oc.orbit(oc.dom(m)).functor;
  const FinFunctor& t = *oc.orbit(oc.cod(m)).functor;
  const NatTrans& nat = oc.transformation(m);
  ordered_json out = ordered_json::object();
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    const int obj = static_cast<int>(d);
    ordered_json component = ordered_json::object();
    for (std::size_t x = 0; x < s.size(obj); ++x) {
      component[s.elements(obj)[x]] = t.elements(obj)[nat.components[d][x]];
    }
    out[cat.object_name(obj)] = std::move(component);
  }
  return out;
}

// --- space ------------------------------------------------------------------

struct RawSimplex {
  std::string id;
  std::vector<int> vertices;
  int orbit;
  const json* restrictions;
  std::string path;
};

std::shared_ptr<const LabeledComplex> parse_space(const json& j,
                                                  const std::shared_ptr<const OrbitCategory>& oc) {
  const std::string path = "space";
  const std::string stage = "space";
  expect(j, json::value_t::object, path);
  const auto vertices = string_list(member(j, "vertices", path), child(path, "vertices"));
  std::map<std::string, int, std::less<>> vertex_index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertex_index.emplace(vertices[i], static_cast<int>(i)).second) {
      invalid(stage, "duplicate vertex '" + vertices[i] + "'");
    }
  }

  const json& simplices = member(j, "simplices", path);
  const std::string spath = child(path, "simplices");
  expect(simplices, json::value_t::array, spath);
  std::vector<RawSimplex> raw;
  std::map<std::vector<int>, std::size_t> by_vertices;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const json& s = simplices[i];
    const std::string p = child(spath, i);
    expect(s, json::value_t::object, p);
    RawSimplex r;
    r.path = p;
    r.id = as_string(member(s, "id", p), child(p, "id"));
    for (const auto& v : string_list(member(s, "vertices", p), child(p, "vertices"))) {
      auto it = vertex_index.find(v);
      if (it == vertex_index.end()) invalid(stage, "simplex '" + r.id + "': unknown vertex '" + v + "'");
      r.vertices.push_back(it->second);
    }
    if (r.vertices.empty()) invalid(stage, "simplex '" + r.id + "' has no vertices");
    const std::string orbit = as_string(member(s, "orbit", p), child(p, "orbit"));
    auto t = oc->find_orbit(orbit);
    if (!t) invalid(stage, "simplex '" + r.id + "': unknown orbit '" + orbit + "'");
    r.orbit = *t;
    auto rit = s.find("restrictions");
    r.restrictions = rit == s.end() ? nullptr : &*rit;
    if (r.restrictions) expect(*r.restrictions, json::value_t::object, child(p, "restrictions"));
    by_vertices.emplace(r.vertices, raw.size());
    raw.push_back(std::move(r));
  }

  auto vertex_list = [&](const std::vector<int>& vs) {
    std::string out = "(";
    for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? ", " : "") + vertices[vs[k]];
    return out + ")";
  };

  std::vector<Simplex> out;
  for (const auto& r : raw) {
    Simplex s{r.id, r.vertices, r.orbit, {}};
    if (r.vertices.size() > 1) {
      if (!r.restrictions) {
        invalid(stage, "simplex '" + r.id + "' " + vertex_list(r.vertices) + " has no restrictions");
      }
      for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        std::vector<int> face = r.vertices;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto fit = by_vertices.find(face);
        if (fit == by_vertices.end()) {
          invalid(stage, "simplex '" + r.id + "' " + vertex_list(r.vertices) + " is missing its face " +
                             vertex_list(face));
        }
        const RawSimplex& f = raw[fit->second];
        auto value = r.restrictions->find(f.id);
        if (value == r.restrictions->end()) {
          invalid(stage, "simplex '" + r.id + "' has no restriction to its face '" + f.id + "'");
        }
        s.restrictions.push_back(parse_transformation(*value, *oc, r.orbit, f.orbit,
                                                      child(child(r.path, "restrictions"), f.id), stage));
      }
    }
    out.push_back(std::move(s));
  }
  auto space = std::make_shared<const LabeledComplex>(oc, vertices, std::move(out));
  if (auto report = validate_space(*space); !report) invalid(stage, report.message);
  return space;
}

// --- map --------------------------------------------------------------------

EquivariantSelfMap parse_map(const json& j, const std::shared_ptr<const LabeledComplex>& space) {
  const std::string path = "map";
  const std::string stage = "map";
  expect(j, json::value_t::object, path);
  const LabeledComplex& x = *space;
  const OrbitCategory& oc = x.orbits();
  EquivariantSelfMap f{space, std::vector<int>(x.vertices().size(), -1), {}};

  const json& vm = member(j, "vertex_map", path);
  expect(vm, json::value_t::object, child(path, "vertex_map"));
  for (const auto& [from, to] : vm.items()) {
    auto a = x.find_vertex(from);
    if (!a) invalid(stage, "vertex_map: unknown vertex '" + from + "'");
    const std::string target = as_string(to, child(child(path, "vertex_map"), from));
    auto b = x.find_vertex(target);
    if (!b) invalid(stage, "vertex_map: unknown vertex '" + target + "'");
    f.vertex_map[*a] = *b;
  }
  for (std::size_t v = 0; v < f.vertex_map.size(); ++v) {
    if (f.vertex_map[v] < 0) invalid(stage, "vertex_map: vertex '" + x.vertices()[v] + "' is not mapped");
  }

  const json& components = member(j, "components", path);
  const std::string cpath = child(path, "components");
  expect(components, json::value_t::object, cpath);
  for (const auto& [id, _] : components.items()) {
    if (!x.find_id(id)) invalid(stage, "components: unknown simplex '" + id + "'");
  }
  f.components.resize(static_cast<std::size_t>(x.dimension() + 1));
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const Simplex& s = x.simplex(ref);
      auto target = carrier(f, ref);
      if (!target) invalid(stage, "the image of simplex '" + s.id + "' is not a simplex");
      auto it = components.find(s.id);
      if (it == components.end()) invalid(stage, "no component over simplex '" + s.id + "'");
      f.components[d].push_back(parse_transformation(*it, oc, s.orbit, x.simplex(*target).orbit,
                                                     child(cpath, s.id), stage));
    }
  }
  if (auto report = validate_map(f); !report) invalid(stage, report.message);
  return f;
}

DocumentOptions parse_options(const json& j) {
  const std::string path = "options";
  expect(j, json::value_t::object, path);
  DocumentOptions options;
  if (auto it = j.find("coefficients"); it != j.end()) {
    options.coefficients = as_string(*it, child(path, "coefficients"));
    if (options.coefficients != "constant" && options.coefficients != "isotropy") {
      invalid("options", "coefficients must be 'constant' or 'isotropy'");
    }
  }
  if (auto it = j.find("subdivide"); it != j.end()) {
    expect(*it, json::value_t::number_integer, child(path, "subdivide"));
    const auto k = it->get<long long>();
    if (k < 0 || k > 8) invalid("options", "subdivide must lie in [0, 8]");
    options.subdivide = static_cast<int>(k);
  }
  return options;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
                     line, column);
  }
}

}  // namespace

Document parse_document(std::string_view text, std::vector<std::string>* passed) {
  const json root = parse_json(text);
  expect(root, json::value_t::object, "document");
  auto pass = [&](const char* stage) {
    if (passed) passed->push_back(stage);
  };

  Document doc;
  const CategorySpec spec = parse_category(member(root, "category", "document"));
  if (auto report = validate_category(spec); !report) invalid("category", report.message);
  doc.category = FinCategory::from_spec(spec);
  pass("category");

  std::vector<Orbit> orbits = parse_orbits(member(root, "orbits", "document"), doc.category);
  try {
    doc.orbits = OrbitCategory::build(doc.category, std::move(orbits));
  } catch (const ValidationError& e) {
    invalid("orbits", e.what());
  }
  pass("orbits");

  doc.space = parse_space(member(root, "space", "document"), doc.orbits);
  pass("space");

  if (auto it = root.find("map"); it != root.end()) {
    doc.map = parse_map(*it, doc.space);
    pass("map");
  }
  if (auto it = root.find("options"); it != root.end()) {
    doc.options = parse_options(*it);
    pass("options");
  }
  return doc;
}

Document load_document(const std::filesystem::path& path, std::vector<std::string>* passed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), passed);
}

std::string write_document(const Document& doc) {
  const FinCategory& cat = *doc.category;
  const OrbitCategory& oc = *doc.orbits;
  ordered_json root = ordered_json::object();

  ordered_json category = ordered_json::object();
  const CategorySpec spec = cat.to_spec();
  category["objects"] = spec.objects;
  ordered_json morphisms = ordered_json::array();
  for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
    if (cat.is_identity(static_cast<int>(m))) continue;
    morphisms.push_back({{"name", cat.morphism_name(static_cast<int>(m))},
                         {"dom", cat.object_name(cat.dom(static_cast<int>(m)))},
                         {"cod", cat.object_name(cat.cod(static_cast<int>(m)))}});
  }
  category["morphisms"] = std::move(morphisms);
  ordered_json composition = ordered_json::array();
  for (const auto& c : spec.composition) {
    composition.push_back({{"first", c.first}, {"second", c.second}, {"result", c.result}});
  }
  category["composition"] = std::move(composition);
  root["category"] = std::move(category);

  ordered_json orbits = ordered_json::array();
  for (std::size_t t = 0; t < oc.orbit_count(); ++t) {
    const Orbit& orbit = oc.orbit(static_cast<int>(t));
    const FinFunctor& f = *orbit.functor;
    ordered_json sets = ordered_json::object();
    for (std::size_t d = 0; d < cat.object_count(); ++d) {
      const auto elements = f.elements(static_cast<int>(d));
      sets[cat.object_name(static_cast<int>(d))] = std::vector<std::string>(elements.begin(), elements.end());
    }
    ordered_json action = ordered_json::object();
    for (std::size_t mi = 0; mi < cat.morphism_count(); ++mi) {
      const int m = static_cast<int>(mi);
      if (cat.is_identity(m)) continue;
      ordered_json mapping = ordered_json::object();
      const auto source = f.elements(cat.dom(m));
      const auto target = f.elements(cat.cod(m));
      for (std::size_t x = 0; x < source.size(); ++x) mapping[source[x]] = target[f.act(m, static_cast<int>(x))];
      action[cat.morphism_name(m)] = std::move(mapping);
    }
    orbits.push_back({{"name", orbit.name}, {"sets", std::move(sets)}, {"action", std::move(action)}});
  }
  root["orbits"] = std::move(orbits);

  const LabeledComplex& x = *doc.space;
  ordered_json space = ordered_json::object();
  space["vertices"] = std::vector<std::string>(x.vertices().begin(), x.vertices().end());
  ordered_json simplices = ordered_json::array();
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const Simplex& s = x.simplex(ref);
      ordered_json entry = ordered_json::object();
      entry["id"] = s.id;
      ordered_json verts = ordered_json::array();
      for (int v : s.vertices) verts.push_back(x.vertices()[v]);
      entry["vertices"] = std::move(verts);
      entry["orbit"] = oc.orbit_name(s.orbit);
      if (d > 0) {
        ordered_json restrictions = ordered_json::object();
        for (int k = d; k >= 0; --k) {
          const MorId r = s.restrictions[k];
          const Simplex& face = x.simplex(*x.facet(ref, k));
          restrictions[face.id] = oc.is_endomorphism(r) && r == oc.identity(oc.dom(r))
                                      ? ordered_json("id")
                                      : write_transformation(oc, r);
        }
        entry["restrictions"] = std::move(restrictions);
      }
      simplices.push_back(std::move(entry));
    }
  }
  space["simplices"] = std::move(simplices);
  root["space"] = std::move(space);

  if (doc.map) {
    const EquivariantSelfMap& f = *doc.map;
    ordered_json vertex_map = ordered_json::object();
    for (std::size_t v = 0; v < f.vertex_map.size(); ++v) {
      vertex_map[x.vertices()[v]] = x.vertices()[f.vertex_map[v]];
    }
    ordered_json components = ordered_json::object();
    for (int d = 0; d <= x.dimension(); ++d) {
      for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
        const MorId u = f.components[d][i];
        components[x.simplices(d)[i].id] =
            u == oc.identity(oc.dom(u)) ? ordered_json("id") : write_transformation(oc, u);
      }
    }
    root["map"] = {{"vertex_map", std::move(vertex_map)}, {"components", std::move(components)}};
  }
  const DocumentOptions defaults;
  if (doc.options.coefficients != defaults.coefficients || doc.options.subdivide != defaults.subdivide) {
    root["options"] = {{"coefficients", doc.options.coefficients}, {"subdivide", doc.options.subdivide}};
  }
  return root.dump(2) + "\n";
}

Document subdivide_document(const Document& doc, int times) {
  if (times < 0) throw ValidationError("subdivide: times must be non-negative");
  Document out = doc;
  for (int k = 0; k < times; ++k) {
    auto refined = std::make_shared<const LabeledComplex>(subdivide(*out.space));
    if (out.map) out.map = subdivide_map(*out.map, refined);
    out.space = std::move(refined);
  }
  return out;
}

}  // namespace eqcell
