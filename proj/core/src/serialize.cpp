#include "entwine/serialize.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "entwine/errors.hpp"

namespace entwine {

using Json = nlohmann::ordered_json;

namespace {

std::string pair_key(const CoalgebraData& c, std::size_t x, std::size_t y) {
  return c.objects[x] + "->" + c.objects[y];
}

std::string triple_key(const CoalgebraData& c, std::size_t x, std::size_t y, std::size_t z) {
  return c.objects[x] + "->" + c.objects[y] + "->" + c.objects[z];
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

const Json& field_at(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key + ": missing");
  return *it;
}

std::size_t read_size(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(path + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar read_scalar(const Json& j, const FieldSpec& f, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<long long>()));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail());
  }
  throw ParseError(path + ": expected a scalar string");
}

Matrix read_matrix(const Json* j, const FieldSpec& f, std::size_t rows, std::size_t cols, const std::string& path) {
  Matrix m(f, rows, cols);
  if (j == nullptr) {
    if (rows * cols == 0) return m;
    throw ParseError(path + ": missing");
  }
  if (!j->is_array()) throw ParseError(path + ": expected an array of rows");
  if (j->size() != rows && !(rows * cols == 0 && j->empty()))
    throw ParseError(path + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j->size()));
  for (std::size_t r = 0; r < j->size(); ++r) {
    const Json& row = (*j)[r];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols)
      throw ParseError(rp + ": expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_scalar(row[c], f, rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

const Json* find_entry(const Json& table, const std::string& key) {
  auto it = table.find(key);
  return it == table.end() ? nullptr : &*it;
}

const Json& table_at(const Json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  static const Json empty = Json::object();
  if (it == j.end()) return empty;
  if (!it->is_object()) throw ParseError(path + "." + key + ": expected an object");
  return *it;
}

void reject_unknown_keys(const Json& table, const std::vector<std::string>& allowed, const std::string& path) {
  for (auto it = table.begin(); it != table.end(); ++it) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == it.key();
    if (!ok) throw ParseError(path + "." + it.key() + ": unknown entry");
  }
}

Json write_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json write_field(const FieldSpec& f) {
  if (f.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

FieldSpec read_field(const Json& j) {
  const Json& kind = field_at(j, "kind", "field");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    const std::size_t p = read_size(field_at(j, "p", "field"), "field.p");
    try {
      return FieldSpec::prime(p);
    } catch (const ParseError& e) {
      throw ParseError("field.p: " + e.detail());
    }
  }
  throw ParseError("field.kind: expected \"Q\" or \"Fp\"");
}

void throw_if_invalid(const Report& r, const std::string& what) {
  if (r.ok()) return;
  const auto& v = r.violations.front();
  std::string msg = what + ": " + v.label + " fails at " + v.where + " (" + v.detail + ")";
  if (r.violations.size() > 1) msg += " and " + std::to_string(r.violations.size() - 1) + " more";
  throw ValidationError(msg);
}

std::vector<std::string> all_pair_keys(const CoalgebraData& c) {
  std::vector<std::string> keys;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) keys.push_back(pair_key(c, x, y));
  return keys;
}

Json write_components(const CoalgebraData& c, const std::vector<ShapedMap>& maps) {
  Json out = Json::object();
  for (std::size_t x = 0; x < maps.size(); ++x)
    if (!maps[x].matrix.empty()) out[c.objects[x]] = write_matrix(maps[x].matrix);
  return out;
}

Json write_pairs(const CoalgebraData& c, const std::vector<ShapedMap>& maps) {
  Json out = Json::object();
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (!maps[x * c.size() + y].matrix.empty()) out[pair_key(c, x, y)] = write_matrix(maps[x * c.size() + y].matrix);
  return out;
}

std::vector<ShapedMap> read_components(const StructureBundle& b, const Json& table, const std::string& path,
                                       const std::function<std::pair<TensorShape, TensorShape>(std::size_t)>& shapes) {
  const auto& c = b.coalgebra;
  reject_unknown_keys(table, c.objects, path);
  std::vector<ShapedMap> out;
  for (std::size_t x = 0; x < c.size(); ++x) {
    auto [dom, cod] = shapes(x);
    Matrix m = read_matrix(find_entry(table, c.objects[x]), b.field, cod.total(), dom.total(), path + "." + c.objects[x]);
    out.emplace_back(std::move(m), dom, cod);
  }
  return out;
}

std::vector<ShapedMap> read_pairs(const StructureBundle& b, const Json& table, const std::string& path,
                                  const std::function<std::pair<TensorShape, TensorShape>(std::size_t, std::size_t)>& shapes) {
  const auto& c = b.coalgebra;
  reject_unknown_keys(table, all_pair_keys(c), path);
  std::vector<ShapedMap> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      auto [dom, cod] = shapes(x, y);
      const std::string key = pair_key(c, x, y);
      Matrix m = read_matrix(find_entry(table, key), b.field, cod.total(), dom.total(), path + "." + key);
      out.emplace_back(std::move(m), dom, cod);
    }
  return out;
}

std::vector<std::size_t> read_carrier(const StructureBundle& b, const Json& j) {
  const auto& c = b.coalgebra;
  const Json& table = field_at(j, "carrier", "module");
  if (!table.is_object()) throw ParseError("module.carrier: expected an object");
  reject_unknown_keys(table, c.objects, "module.carrier");
  std::vector<std::size_t> out;
  for (const auto& name : c.objects) out.push_back(read_size(field_at(table, name, "module.carrier"), "module.carrier." + name));
  return out;
}

Json write_carrier(const CoalgebraData& c, const std::vector<std::size_t>& carrier) {
  Json out = Json::object();
  for (std::size_t x = 0; x < carrier.size(); ++x) out[c.objects[x]] = carrier[x];
  return out;
}

Json sigma_json(const StructureBundle& b, const SigmaElement& s) { return write_components(b.coalgebra, s.sigma); }
Json lambda_json(const StructureBundle& b, const LambdaElement& l) { return write_components(b.coalgebra, l.lambda); }

SigmaElement sigma_from_json(const StructureBundle& b, const Json& table, const std::string& path) {
  if (!table.is_object()) throw ParseError(path + ": expected an object");
  return SigmaElement{read_components(b, table, path, [&](std::size_t x) {
    return std::make_pair(TensorShape{b.c_dim(x, x), b.a_dim()}, TensorShape{1});
  })};
}

LambdaElement lambda_from_json(const StructureBundle& b, const Json& table, const std::string& path) {
  if (!table.is_object()) throw ParseError(path + ": expected an object");
  return LambdaElement{read_components(b, table, path, [&](std::size_t x) {
    return std::make_pair(TensorShape{b.c_dim(x, x)}, TensorShape{b.a_dim(), b.a_dim()});
  })};
}

CointegralData cointegral_from_json(const StructureBundle& b, const Json& j) {
  CointegralData g;
  const Json& table = field_at(j, "gamma", "cointegral");
  if (!table.is_object()) throw ParseError("gamma: expected an object");
  g.gamma = read_components(b, table, "gamma", [&](std::size_t x) {
    return std::make_pair(TensorShape{b.a_dim(), b.c_dim(x, x)}, TensorShape{b.a_dim()});
  });
  const std::size_t d = b.a_dim();
  g.coev = ShapedMap(read_matrix(&field_at(j, "coev", "cointegral"), b.field, d * d, 1, "coev"), TensorShape{1},
                     TensorShape{d, d});
  return g;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

StructureBundle parse_bundle_unchecked(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("bundle: expected a JSON object");
  reject_unknown_keys(j, {"field", "objects", "hom_dims", "delta", "counit", "algebra", "entwining"}, "bundle");
  const FieldSpec f = read_field(field_at(j, "field", "bundle"));

  const Json& objs = field_at(j, "objects", "bundle");
  if (!objs.is_array() || objs.empty()) throw ParseError("objects: expected a non-empty array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (!objs[i].is_string()) throw ParseError("objects[" + std::to_string(i) + "]: expected a string");
    const std::string n = objs[i].get<std::string>();
    if (n.empty() || n.find("->") != std::string::npos)
      throw ParseError("objects[" + std::to_string(i) + "]: invalid name '" + n + "'");
    for (const auto& prev : names)
      if (prev == n) throw ParseError("objects: duplicate name '" + n + "'");
    names.push_back(n);
  }
  const std::size_t n = names.size();

  CoalgebraData probe;
  probe.objects = names;
  const Json& dims_table = field_at(j, "hom_dims", "bundle");
  if (!dims_table.is_object()) throw ParseError("hom_dims: expected an object");
  reject_unknown_keys(dims_table, all_pair_keys(probe), "hom_dims");
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::string key = pair_key(probe, x, y);
      dims.push_back(read_size(field_at(dims_table, key, "hom_dims"), "hom_dims." + key));
    }

  CoalgebraData c = CoalgebraData::zeros(f, names, dims);
  const Json& delta = table_at(j, "delta", "bundle");
  std::vector<std::string> triple_keys;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) triple_keys.push_back(triple_key(c, x, y, z));
  reject_unknown_keys(delta, triple_keys, "delta");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::string key = triple_key(c, x, y, z);
        auto& d = c.delta(x, y, z);
        d.matrix = read_matrix(find_entry(delta, key), f, d.matrix.rows(), d.matrix.cols(), "delta." + key);
      }
  const Json& counit = table_at(j, "counit", "bundle");
  reject_unknown_keys(counit, names, "counit");
  for (std::size_t x = 0; x < n; ++x)
    c.counits[x].matrix = read_matrix(find_entry(counit, names[x]), f, 1, c.hom_dim(x, x), "counit." + names[x]);

  const Json& alg = field_at(j, "algebra", "bundle");
  if (!alg.is_object()) throw ParseError("algebra: expected an object");
  reject_unknown_keys(alg, {"dim", "mul", "unit"}, "algebra");
  const std::size_t ad = read_size(field_at(alg, "dim", "algebra"), "algebra.dim");
  if (ad == 0) throw ParseError("algebra.dim: must be positive");
  AlgebraData a = AlgebraData::make(f, ad, read_matrix(&field_at(alg, "mul", "algebra"), f, ad, ad * ad, "algebra.mul"),
                                    read_matrix(&field_at(alg, "unit", "algebra"), f, ad, 1, "algebra.unit"));

  StructureBundle b;
  b.field = f;
  b.coalgebra = std::move(c);
  b.algebra = std::move(a);
  b.entwining.objects = n;
  b.entwining.psis = read_pairs(b, table_at(j, "entwining", "bundle"), "entwining", [&](std::size_t x, std::size_t y) {
    return std::make_pair(TensorShape{b.c_dim(x, y), ad}, TensorShape{ad, b.c_dim(x, y)});
  });
  return b;
}

StructureBundle parse_bundle(std::string_view text) {
  StructureBundle b = parse_bundle_unchecked(text);
  throw_if_invalid(check_bundle(b), "bundle");
  return b;
}

StructureBundle load_bundle(const std::string& path) { return parse_bundle(read_text_file(path)); }

std::string save_bundle(const StructureBundle& b) {
  const auto& c = b.coalgebra;
  const std::size_t n = c.size();
  Json j;
  j["field"] = write_field(b.field);
  j["objects"] = c.objects;
  Json dims = Json::object();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) dims[pair_key(c, x, y)] = c.hom_dim(x, y);
  j["hom_dims"] = dims;
  Json delta = Json::object();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!c.delta(x, y, z).matrix.empty()) delta[triple_key(c, x, y, z)] = write_matrix(c.delta(x, y, z).matrix);
  j["delta"] = delta;
  j["counit"] = write_components(c, c.counits);
  j["algebra"] = Json{{"dim", b.algebra.dim},
                      {"mul", write_matrix(b.algebra.mul.matrix)},
                      {"unit", write_matrix(b.algebra.unit.matrix)}};
  j["entwining"] = write_pairs(c, b.entwining.psis);
  return j.dump(2) + "\n";
}

void save_bundle(const StructureBundle& b, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << save_bundle(b);
}

AnyModule parse_module_unchecked(const StructureBundle& b, std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("module: expected a JSON object");
  const Json& kind_j = field_at(j, "kind", "module");
  if (!kind_j.is_string()) throw ParseError("module.kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  const std::size_t d = b.a_dim();
  const auto carrier = read_carrier(b, j);
  AnyModule out;
  if (kind == "comodule" || kind == "entwined-comodule") {
    reject_unknown_keys(j, kind == "comodule" ? std::vector<std::string>{"kind", "carrier", "coaction"}
                                              : std::vector<std::string>{"kind", "carrier", "coaction", "action"},
                        "module");
    ComoduleData m;
    m.carrier = carrier;
    m.coaction = read_pairs(b, table_at(j, "coaction", "module"), "coaction", [&](std::size_t x, std::size_t y) {
      return std::make_pair(TensorShape{carrier[x]}, TensorShape{carrier[y], b.c_dim(x, y)});
    });
    if (kind == "comodule") {
      out = m;
    } else {
      EntwinedComoduleData e;
      e.comodule = std::move(m);
      e.action = read_components(b, table_at(j, "action", "module"), "action", [&](std::size_t x) {
        return std::make_pair(TensorShape{carrier[x], d}, TensorShape{carrier[x]});
      });
      out = std::move(e);
    }
  } else if (kind == "contramodule" || kind == "entwined-contramodule") {
    reject_unknown_keys(j, kind == "contramodule" ? std::vector<std::string>{"kind", "carrier", "contraaction"}
                                                  : std::vector<std::string>{"kind", "carrier", "contraaction", "action"},
                        "module");
    ContramoduleData m;
    m.carrier = carrier;
    m.contraaction = read_pairs(b, table_at(j, "contraaction", "module"), "contraaction", [&](std::size_t x, std::size_t y) {
      return std::make_pair(TensorShape{b.c_dim(x, y), carrier[y]}, TensorShape{carrier[x]});
    });
    if (kind == "contramodule") {
      out = m;
    } else {
      EntwinedContramoduleData e;
      e.contramodule = std::move(m);
      e.action = read_components(b, table_at(j, "action", "module"), "action", [&](std::size_t x) {
        return std::make_pair(TensorShape{carrier[x]}, TensorShape{d, carrier[x]});
      });
      out = std::move(e);
    }
  } else {
    throw ParseError("module.kind: unknown kind '" + kind + "'");
  }
  return out;
}

AnyModule parse_module(const StructureBundle& b, std::string_view text) {
  AnyModule m = parse_module_unchecked(b, text);
  throw_if_invalid(check_module(b, m), "module");
  return m;
}

AnyModule load_module(const StructureBundle& b, const std::string& path) {
  return parse_module(b, read_text_file(path));
}

std::string save_module(const StructureBundle& b, const AnyModule& m) {
  const auto& c = b.coalgebra;
  Json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ComoduleData>) {
          j["kind"] = "comodule";
          j["carrier"] = write_carrier(c, v.carrier);
          j["coaction"] = write_pairs(c, v.coaction);
        } else if constexpr (std::is_same_v<T, EntwinedComoduleData>) {
          j["kind"] = "entwined-comodule";
          j["carrier"] = write_carrier(c, v.carrier());
          j["coaction"] = write_pairs(c, v.comodule.coaction);
          j["action"] = write_components(c, v.action);
        } else if constexpr (std::is_same_v<T, ContramoduleData>) {
          j["kind"] = "contramodule";
          j["carrier"] = write_carrier(c, v.carrier);
          j["contraaction"] = write_pairs(c, v.contraaction);
        } else {
          j["kind"] = "entwined-contramodule";
          j["carrier"] = write_carrier(c, v.carrier());
          j["contraaction"] = write_pairs(c, v.contramodule.contraaction);
          j["action"] = write_components(c, v.action);
        }
      },
      m);
  return j.dump(2) + "\n";
}

MorphismData parse_morphism(const StructureBundle& b, const std::vector<std::size_t>& source,
                            const std::vector<std::size_t>& target, std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("morphism: expected a JSON object");
  reject_unknown_keys(j, {"components"}, "morphism");
  const Json& table = field_at(j, "components", "morphism");
  if (!table.is_object()) throw ParseError("morphism.components: expected an object");
  const auto& c = b.coalgebra;
  if (source.size() != c.size() || target.size() != c.size()) throw ShapeMismatch("carrier sizes");
  reject_unknown_keys(table, c.objects, "components");
  MorphismData m;
  for (std::size_t x = 0; x < c.size(); ++x)
    m.components.push_back(
        read_matrix(find_entry(table, c.objects[x]), b.field, target[x], source[x], "components." + c.objects[x]));
  return m;
}

std::string save_morphism(const StructureBundle& b, const MorphismData& m) {
  Json table = Json::object();
  for (std::size_t x = 0; x < m.components.size(); ++x)
    if (!m.components[x].empty()) table[b.coalgebra.objects[x]] = write_matrix(m.components[x]);
  return Json{{"components", table}}.dump(2) + "\n";
}

std::string save_sigma(const StructureBundle& b, const SigmaElement& s) {
  return Json{{"sigma", sigma_json(b, s)}}.dump(2) + "\n";
}

std::string save_lambda(const StructureBundle& b, const LambdaElement& l) {
  return Json{{"lambda", lambda_json(b, l)}}.dump(2) + "\n";
}

std::string save_cointegral(const StructureBundle& b, const CointegralData& g) {
  return Json{{"gamma", write_components(b.coalgebra, g.gamma)}, {"coev", write_matrix(g.coev.matrix)}}.dump(2) + "\n";
}

SigmaElement parse_sigma(const StructureBundle& b, std::string_view text) {
  const Json j = parse_json(text);
  return sigma_from_json(b, field_at(j, "sigma", "certificate"), "sigma");
}

LambdaElement parse_lambda(const StructureBundle& b, std::string_view text) {
  const Json j = parse_json(text);
  return lambda_from_json(b, field_at(j, "lambda", "certificate"), "lambda");
}

CointegralData parse_cointegral(const StructureBundle& b, std::string_view text) {
  return cointegral_from_json(b, parse_json(text));
}

std::string save_decision(const StructureBundle& b, const Decision& d) {
  Json j;
  j["outcome"] = outcome_name(d.outcome);
  if (d.sigma) j["sigma"] = sigma_json(b, *d.sigma);
  if (d.lambda) j["lambda"] = lambda_json(b, *d.lambda);
  if (d.cointegral) {
    j["gamma"] = write_components(b.coalgebra, d.cointegral->gamma);
    j["coev"] = write_matrix(d.cointegral->coev.matrix);
  }
  if (d.witness) j["witness"] = Json{{"rank", d.witness->rank}, {"augmented_rank", d.witness->augmented_rank}};
  if (d.enumeration) {
    const auto& e = *d.enumeration;
    j["enumeration"] = Json{{"strategy", e.strategy},
                            {"w1_dim", e.w1_dim},
                            {"search_space", e.search_space},
                            {"examined", e.examined},
                            {"exhaustive", e.exhaustive}};
  }
  return j.dump(2) + "\n";
}

Decision parse_decision(const StructureBundle& b, std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("decision: expected a JSON object");
  Decision d;
  const Json& o = field_at(j, "outcome", "decision");
  if (o == "yes")
    d.outcome = Outcome::Yes;
  else if (o == "no")
    d.outcome = Outcome::No;
  else if (o == "unknown")
    d.outcome = Outcome::Unknown;
  else
    throw ParseError("decision.outcome: expected yes, no or unknown");
  if (j.contains("sigma")) d.sigma = sigma_from_json(b, j["sigma"], "sigma");
  if (j.contains("lambda")) d.lambda = lambda_from_json(b, j["lambda"], "lambda");
  if (j.contains("gamma")) d.cointegral = cointegral_from_json(b, j);
  if (j.contains("witness")) {
    const Json& w = j["witness"];
    d.witness = RankWitness{read_size(field_at(w, "rank", "witness"), "witness.rank"),
                            read_size(field_at(w, "augmented_rank", "witness"), "witness.augmented_rank")};
  }
  if (j.contains("enumeration")) {
    const Json& e = j["enumeration"];
    EnumerationStats s;
    s.strategy = field_at(e, "strategy", "enumeration").get<std::string>();
    s.w1_dim = read_size(field_at(e, "w1_dim", "enumeration"), "enumeration.w1_dim");
    s.search_space = field_at(e, "search_space", "enumeration").get<std::uint64_t>();
    s.examined = field_at(e, "examined", "enumeration").get<std::uint64_t>();
    s.exhaustive = field_at(e, "exhaustive", "enumeration").get<bool>();
    d.enumeration = s;
  }
  return d;
}

}  // namespace entwine
