#include "hopfind/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hopfind/error.hpp"

namespace hopfind {

using Json = nlohmann::ordered_json;

namespace {

// ---- reading ---------------------------------------------------------------

class Reader {
 public:
  explicit Reader(Field field) : field_(field) {}

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw InputError("schema error at " + (path.empty() ? std::string("/") : path) + ": " + what);
  }

  static const Json& member(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
  }

  static void onlyKeys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
        fail(path, "unknown key \"" + k + "\"");
      }
    }
  }

  static std::string string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  static std::size_t index(const Json& j, std::size_t bound, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected a non-negative integer index");
    if (j.is_number_unsigned() ? false : j.get<std::int64_t>() < 0) fail(path, "negative index");
    auto v = j.get<std::uint64_t>();
    if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
  }

  Scalar scalar(const Json& j, const std::string& path) const {
    try {
      if (j.is_number_integer()) return field_.fromInt(j.get<std::int64_t>());
      if (j.is_string()) return field_.parse(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
    fail(path, "expected an integer or a string \"a/b\"");
  }

  static const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  // Entries [i_1, ..., i_m, c]; dims gives the bound of each index.
  template <class Sink>
  void entries(const Json& j, const std::vector<std::size_t>& dims, const std::string& path, Sink sink) const {
    array(j, path);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t n = 0; n < j.size(); ++n) {
      const std::string p = path + "/" + std::to_string(n);
      const Json& e = j[n];
      if (!e.is_array() || e.size() != dims.size() + 1) {
        fail(p, "expected an entry of " + std::to_string(dims.size()) + " indices and a coefficient");
      }
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < dims.size(); ++k) idx.push_back(index(e[k], dims[k], p + "/" + std::to_string(k)));
      if (!seen.insert(idx).second) fail(p, "duplicate entry");
      sink(idx, scalar(e[dims.size()], p + "/" + std::to_string(dims.size())));
    }
  }

  // Entries [i, j, c] meaning f(e_i) contains c·e_j.
  Matrix linearMap(const Json& j, std::size_t source, std::size_t target, const std::string& path) const {
    Matrix m(target, source);
    for (std::size_t r = 0; r < target; ++r) {
      for (std::size_t c = 0; c < source; ++c) m(r, c) = field_.zero();
    }
    entries(j, {source, target}, path, [&](const auto& idx, const Scalar& c) { m(idx[1], idx[0]) = c; });
    return m;
  }

  Vector vector(const Json& j, std::size_t dim, const std::string& path) const {
    Vector v(dim, field_.zero());
    entries(j, {dim}, path, [&](const auto& idx, const Scalar& c) { v[idx[0]] = c; });
    return v;
  }

  FiniteDimSpace basis(const Json& j, const std::string& path) const {
    array(j, path);
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
      labels.push_back(string(j[i], path + "/" + std::to_string(i)));
      if (!seen.insert(labels.back()).second) fail(path + "/" + std::to_string(i), "duplicate basis label");
    }
    if (labels.empty()) fail(path, "empty basis");
    return FiniteDimSpace(std::move(labels));
  }

  AlgebraPtr algebra(const Json& obj, const std::string& path) const {
    FiniteDimSpace space = basis(member(obj, "basis", path), path + "/basis");
    const std::size_t d = space.dim();
    std::vector<Vector> dense(d * d, Vector(d, field_.zero()));
    entries(member(obj, "product", path), {d, d, d}, path + "/product",
            [&](const auto& idx, const Scalar& c) { dense[idx[0] * d + idx[1]][idx[2]] = c; });
    std::vector<SparseVector> products;
    for (const auto& v : dense) products.push_back(sparsify(v));
    Vector unit = vector(member(obj, "unit", path), d, path + "/unit");
    return makeAlgebra(field_, std::move(space), std::move(products), std::move(unit));
  }

 private:
  Field field_;
};

Field parseField(const Json& j) {
  Reader::onlyKeys(j, {"rational", "prime"}, "/field");
  if (j.contains("rational")) {
    if (j.size() != 1 || !j["rational"].is_boolean() || !j["rational"].get<bool>()) {
      Reader::fail("/field", "expected {\"rational\": true} or {\"prime\": p}");
    }
    return Field::rationals();
  }
  if (!j.contains("prime") || !j["prime"].is_number_unsigned()) {
    Reader::fail("/field", "expected {\"rational\": true} or {\"prime\": p}");
  }
  try {
    return Field::prime(j["prime"].get<std::uint64_t>());
  } catch (const InputError& e) {
    Reader::fail("/field/prime", e.what());
  }
}

template <class T>
void requireUnique(const std::vector<T>& items, const std::string& section) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!seen.insert(items[i].name).second) {
      Reader::fail("/" + section + "/" + std::to_string(i), "duplicate name \"" + items[i].name + "\"");
    }
  }
}

// ---- writing ---------------------------------------------------------------

Json scalarJson(const Scalar& s) {
  std::string text = s.toString();
  if (text.find('/') == std::string::npos && text.size() < 18) return Json(std::stoll(text));
  return Json(text);
}

Json linearMapJson(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).isZero()) out.push_back(Json::array({c, r, scalarJson(m(r, c))}));
    }
  }
  return out;
}

Json vectorJson(std::span<const Scalar> v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].isZero()) out.push_back(Json::array({i, scalarJson(v[i])}));
  }
  return out;
}

void algebraJson(Json& obj, const Algebra& a) {
  obj["basis"] = a.space().labels();
  const std::size_t d = a.dim();
  Json product = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector p = a.basisProduct(i, j);
      std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [k, c] : p) {
        if (!c.isZero()) product.push_back(Json::array({i, j, k, scalarJson(c)}));
      }
    }
  }
  obj["product"] = std::move(product);
  obj["unit"] = vectorJson(a.unit());
}

// Two-space indentation with arrays of scalars kept on one line, so each
// sparse entry is a single line.
void render(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(k).dump() + ": ";
      render(v, indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
    if (flat) {
      out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      render(j[i], indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

}  // namespace

HopfPtr InstanceFile::hopfNamed(const std::string& name) const { return hopfEntry(name).hopf; }

const InstanceFile::NamedHopf& InstanceFile::hopfEntry(const std::string& name) const {
  for (const auto& h : hopf) {
    if (h.name == name) return h;
  }
  throw InputError("unknown Hopf algebra \"" + name + "\"");
}

AlgebraPtr InstanceFile::algebraNamed(const std::string& name) const {
  for (const auto& a : algebras) {
    if (a.name == name) return a.algebra;
  }
  for (const auto& h : hopf) {
    if (h.name == name) return h.hopf->algebra;
  }
  throw InputError("unknown algebra \"" + name + "\"");
}

const InstanceFile::Embedding& InstanceFile::embeddingNamed(const std::string& name) const {
  for (const auto& e : embeddings) {
    if (e.name == name) return e;
  }
  throw InputError("unknown embedding \"" + name + "\"");
}

InstanceFile parseInstance(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
  Reader::onlyKeys(root,
                   {"schema", "field", "algebras", "hopf", "embeddings", "quotients", "module_algebras", "morphisms"},
                   "");
  const Json& schema = Reader::member(root, "schema", "");
  if (!schema.is_number_integer() || schema.get<std::int64_t>() != 1) Reader::fail("/schema", "expected schema 1");

  InstanceFile file;
  file.field = parseField(Reader::member(root, "field", ""));
  Reader r(file.field);
  auto section = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    auto it = root.find(key);
    return it == root.end() ? empty : Reader::array(*it, std::string("/") + key);
  };

  const Json& algs = section("algebras");
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const std::string p = "/algebras/" + std::to_string(i);
    Reader::onlyKeys(algs[i], {"name", "basis", "product", "unit"}, p);
    file.algebras.push_back({Reader::string(Reader::member(algs[i], "name", p), p + "/name"), r.algebra(algs[i], p)});
  }
  requireUnique(file.algebras, "algebras");

  const Json& hs = section("hopf");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string p = "/hopf/" + std::to_string(i);
    const Json& h = hs[i];
    Reader::onlyKeys(h, {"name", "basis", "product", "unit", "delta", "counit", "antipode", "group"}, p);
    InstanceFile::NamedHopf entry;
    entry.name = Reader::string(Reader::member(h, "name", p), p + "/name");
    HopfAlgebra hopf;
    hopf.algebra = r.algebra(h, p);
    const std::size_t d = hopf.algebra->dim();
    hopf.delta = Matrix(d * d, d);
    for (std::size_t x = 0; x < d * d; ++x) {
      for (std::size_t y = 0; y < d; ++y) hopf.delta(x, y) = file.field.zero();
    }
    r.entries(Reader::member(h, "delta", p), {d, d, d}, p + "/delta",
              [&](const auto& idx, const Scalar& c) { hopf.delta(idx[1] * d + idx[2], idx[0]) = c; });
    Vector counit = r.vector(Reader::member(h, "counit", p), d, p + "/counit");
    hopf.counit = Matrix::fromRows(d, std::vector<Vector>{counit});
    hopf.antipode = r.linearMap(Reader::member(h, "antipode", p), d, d, p + "/antipode");
    if (h.contains("group")) {
      const Json& t = Reader::array(h["group"], p + "/group");
      if (t.size() != d) Reader::fail(p + "/group", "table must have one row per basis element");
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t a = 0; a < d; ++a) {
        const std::string rp = p + "/group/" + std::to_string(a);
        if (!Reader::array(t[a], rp).is_array() || t[a].size() != d) Reader::fail(rp, "row has wrong length");
        std::vector<std::size_t> row;
        for (std::size_t b = 0; b < d; ++b) row.push_back(Reader::index(t[a][b], d, rp + "/" + std::to_string(b)));
        table.push_back(std::move(row));
      }
      entry.group = std::move(table);
    }
    entry.hopf = std::make_shared<const HopfAlgebra>(std::move(hopf));
    file.hopf.push_back(std::move(entry));
  }
  requireUnique(file.hopf, "hopf");

  const Json& es = section("embeddings");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = "/embeddings/" + std::to_string(i);
    const Json& e = es[i];
    Reader::onlyKeys(e, {"name", "sub", "ambient", "incl", "beta", "phi"}, p);
    InstanceFile::Embedding entry;
    entry.name = Reader::string(Reader::member(e, "name", p), p + "/name");
    entry.sub = Reader::string(Reader::member(e, "sub", p), p + "/sub");
    entry.ambient = Reader::string(Reader::member(e, "ambient", p), p + "/ambient");
    std::size_t db, da;
    try {
      db = file.hopfNamed(entry.sub)->dim();
      da = file.hopfNamed(entry.ambient)->dim();
    } catch (const InputError& err) {
      Reader::fail(p, err.what());
    }
    entry.incl = r.linearMap(Reader::member(e, "incl", p), db, da, p + "/incl");
    if (e.contains("beta")) entry.beta = r.linearMap(e["beta"], db, db, p + "/beta");
    if (e.contains("phi")) entry.phi = r.linearMap(e["phi"], da, db, p + "/phi");
    file.embeddings.push_back(std::move(entry));
  }
  requireUnique(file.embeddings, "embeddings");

  const Json& qs = section("quotients");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const std::string p = "/quotients/" + std::to_string(i);
    Reader::onlyKeys(qs[i], {"name", "kernel"}, p);
    InstanceFile::QuotientDecl q{Reader::string(Reader::member(qs[i], "name", p), p + "/name"),
                                 Reader::string(Reader::member(qs[i], "kernel", p), p + "/kernel")};
    try {
      file.embeddingNamed(q.embedding);
    } catch (const InputError& err) {
      Reader::fail(p + "/kernel", err.what());
    }
    file.quotients.push_back(std::move(q));
  }
  requireUnique(file.quotients, "quotients");

  const Json& ms = section("module_algebras");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string p = "/module_algebras/" + std::to_string(i);
    const Json& m = ms[i];
    Reader::onlyKeys(m, {"name", "hopf", "algebra", "action"}, p);
    InstanceFile::NamedModuleAlgebra entry;
    entry.name = Reader::string(Reader::member(m, "name", p), p + "/name");
    entry.hopf = Reader::string(Reader::member(m, "hopf", p), p + "/hopf");
    entry.algebra = Reader::string(Reader::member(m, "algebra", p), p + "/algebra");
    std::size_t db, dc;
    try {
      db = file.hopfNamed(entry.hopf)->dim();
      dc = file.algebraNamed(entry.algebra)->dim();
    } catch (const InputError& err) {
      Reader::fail(p, err.what());
    }
    entry.action.assign(db, Matrix(dc, dc));
    for (auto& a : entry.action) {
      for (std::size_t x = 0; x < dc; ++x) {
        for (std::size_t y = 0; y < dc; ++y) a(x, y) = file.field.zero();
      }
    }
    r.entries(Reader::member(m, "action", p), {db, dc, dc}, p + "/action",
              [&](const auto& idx, const Scalar& c) { entry.action[idx[0]](idx[2], idx[1]) = c; });
    file.moduleAlgebras.push_back(std::move(entry));
  }
  requireUnique(file.moduleAlgebras, "module_algebras");

  const Json& mor = section("morphisms");
  for (std::size_t i = 0; i < mor.size(); ++i) {
    const std::string p = "/morphisms/" + std::to_string(i);
    const Json& m = mor[i];
    Reader::onlyKeys(m, {"name", "source", "target", "kernel", "map"}, p);
    InstanceFile::Morphism entry;
    entry.name = Reader::string(Reader::member(m, "name", p), p + "/name");
    entry.source = Reader::string(Reader::member(m, "source", p), p + "/source");
    entry.target = Reader::string(Reader::member(m, "target", p), p + "/target");
    entry.kernel = Reader::string(Reader::member(m, "kernel", p), p + "/kernel");
    std::size_t ds, dt;
    try {
      ds = file.hopfNamed(entry.source)->dim();
      dt = file.hopfNamed(entry.target)->dim();
      if (file.embeddingNamed(entry.kernel).ambient != entry.source) {
        Reader::fail(p + "/kernel", "kernel embedding must land in the source");
      }
    } catch (const InputError& err) {
      Reader::fail(p, err.what());
    }
    entry.map = r.linearMap(Reader::member(m, "map", p), ds, dt, p + "/map");
    file.morphisms.push_back(std::move(entry));
  }
  requireUnique(file.morphisms, "morphisms");
  return file;
}

InstanceFile loadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parseInstance(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serializeInstance(const InstanceFile& file) {
  Json root;
  root["schema"] = 1;
  root["field"] = file.field.isPrime() ? Json{{"prime", file.field.characteristic()}} : Json{{"rational", true}};
  if (!file.algebras.empty()) {
    Json algs = Json::array();
    for (const auto& a : file.algebras) {
      Json obj;
      obj["name"] = a.name;
      algebraJson(obj, *a.algebra);
      algs.push_back(std::move(obj));
    }
    root["algebras"] = std::move(algs);
  }
  if (!file.hopf.empty()) {
    Json hs = Json::array();
    for (const auto& h : file.hopf) {
      const HopfAlgebra& hopf = *h.hopf;
      const std::size_t d = hopf.dim();
      Json obj;
      obj["name"] = h.name;
      algebraJson(obj, hopf.alg());
      Json delta = Json::array();
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t pq = 0; pq < d * d; ++pq) {
          const Scalar& c = hopf.delta(pq, x);
          if (!c.isZero()) delta.push_back(Json::array({x, pq / d, pq % d, scalarJson(c)}));
        }
      }
      obj["delta"] = std::move(delta);
      obj["counit"] = vectorJson(hopf.counit.flat());
      obj["antipode"] = linearMapJson(hopf.antipode);
      if (h.group) obj["group"] = *h.group;
      hs.push_back(std::move(obj));
    }
    root["hopf"] = std::move(hs);
  }
  if (!file.embeddings.empty()) {
    Json es = Json::array();
    for (const auto& e : file.embeddings) {
      Json obj;
      obj["name"] = e.name;
      obj["sub"] = e.sub;
      obj["ambient"] = e.ambient;
      obj["incl"] = linearMapJson(e.incl);
      if (e.beta) obj["beta"] = linearMapJson(*e.beta);
      if (e.phi) obj["phi"] = linearMapJson(*e.phi);
      es.push_back(std::move(obj));
    }
    root["embeddings"] = std::move(es);
  }
  if (!file.quotients.empty()) {
    Json qs = Json::array();
    for (const auto& q : file.quotients) qs.push_back(Json{{"name", q.name}, {"kernel", q.embedding}});
    root["quotients"] = std::move(qs);
  }
  if (!file.moduleAlgebras.empty()) {
    Json ms = Json::array();
    for (const auto& m : file.moduleAlgebras) {
      Json action = Json::array();
      for (std::size_t b = 0; b < m.action.size(); ++b) {
        const Matrix& op = m.action[b];
        for (std::size_t c = 0; c < op.cols(); ++c) {
          for (std::size_t r = 0; r < op.rows(); ++r) {
            if (!op(r, c).isZero()) action.push_back(Json::array({b, c, r, scalarJson(op(r, c))}));
          }
        }
      }
      ms.push_back(Json{{"name", m.name}, {"hopf", m.hopf}, {"algebra", m.algebra}, {"action", std::move(action)}});
    }
    root["module_algebras"] = std::move(ms);
  }
  if (!file.morphisms.empty()) {
    Json mor = Json::array();
    for (const auto& m : file.morphisms) {
      mor.push_back(Json{{"name", m.name},
                         {"source", m.source},
                         {"target", m.target},
                         {"kernel", m.kernel},
                         {"map", linearMapJson(m.map)}});
    }
    root["morphisms"] = std::move(mor);
  }
  std::string out;
  render(root, 0, out);
  return out + "\n";
}

EmbeddingPtr buildEmbedding(const InstanceFile& file, const InstanceFile::Embedding& e) {
  return std::make_shared<const HopfSubalgebraEmbedding>(
      makeEmbedding(file.hopfNamed(e.sub), file.hopfNamed(e.ambient), e.incl));
}

FrobeniusSystem frobeniusFor(const InstanceFile&, const InstanceFile::Embedding& e, EmbeddingPtr built) {
  if (!e.phi) return buildFrobeniusSystem(built, e.beta);
  const std::size_t db = built->sub->dim();
  Matrix beta = e.beta.value_or(Matrix::identity(db));
  auto betaInverse = inverse(beta);
  if (!betaInverse) throw HypothesisError("beta automorphism", "β is not invertible");
  DualBases d = computeDualBases(*built, beta, *e.phi);
  FrobeniusSystem sys{built, beta, *betaInverse, *e.phi, std::move(d.r), std::move(d.l), {}};
  sys.verified = verifyFrobenius(sys);
  return sys;
}

FiniteGroup groupOf(const InstanceFile::NamedHopf& h) {
  if (!h.group) throw InputError("\"" + h.name + "\" carries no group table");
  return FiniteGroup(h.hopf->space().labels(), *h.group);
}

}  // namespace hopfind
