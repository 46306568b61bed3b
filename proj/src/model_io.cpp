#include "model_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>

#include "inference.hpp"

namespace anyonic {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return doc;
}

std::string require_string(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw ParseError(std::string("missing string field \"") + key + "\"");
  return doc[key].get<std::string>();
}

}  // namespace

bool is_builtin_name(std::string_view name) {
  if (name == "fibonacci" || name == "ising") return true;
  if (name.size() >= 2 && name[0] == 'z') {
    for (const char ch : name.substr(1))
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  }
  return false;
}

std::shared_ptr<const AnyonModel> builtin_model(std::string_view name) {
  if (name == "fibonacci") return shared_fibonacci();
  if (name == "ising") return shared_ising();
  if (name.size() >= 2 && name[0] == 'z' && is_builtin_name(name)) {
    const int n = std::stoi(std::string(name.substr(1)));
    return std::make_shared<const AnyonModel>(AnyonModel::zn(n));
  }
  throw DomainError("unknown builtin model \"" + std::string(name) + "\"");
}

std::shared_ptr<const AnyonModel> parse_model(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("model document must be an object");

  if (doc.contains("builtin")) {
    const std::string kind = doc["builtin"].get<std::string>();
    if (kind == "zn") {
      if (!doc.contains("n")) throw ParseError("builtin \"zn\" needs field \"n\"");
      return std::make_shared<const AnyonModel>(AnyonModel::zn(doc["n"].get<int>()));
    }
    return builtin_model(kind);
  }

  ModelData data;
  data.name = doc.contains("name") ? doc["name"].get<std::string>() : "custom";

  if (!doc.contains("charges") || !doc["charges"].is_array())
    throw ParseError("model needs a \"charges\" array");
  for (const auto& c : doc["charges"]) data.charge_labels.push_back(c.get<std::string>());

  auto index_of = [&](const std::string& label) -> int {
    for (size_t i = 0; i < data.charge_labels.size(); ++i)
      if (data.charge_labels[i] == label) return static_cast<int>(i);
    throw ParseError("unknown charge label \"" + label + "\"");
  };

  if (!doc.contains("fusion") || !doc["fusion"].is_array())
    throw ParseError("model needs a \"fusion\" array");
  for (const auto& t : doc["fusion"]) {
    if (!t.is_array() || t.size() != 3) throw ParseError("fusion entries are triples [a,b,c]");
    data.fusion_triples.push_back({index_of(t[0].get<std::string>()),
                                   index_of(t[1].get<std::string>()),
                                   index_of(t[2].get<std::string>())});
  }

  // Structural pass without F data, to get the quantum dimensions needed to
  // convert the two-vertex file entries into recoupling form.
  ModelData skeleton = data;
  const AnyonModel lax(std::move(skeleton), AnyonModel::Validation::lax);

  if (doc.contains("f_symbols")) {
    for (const auto& e : doc["f_symbols"]) {
      const int a = index_of(require_string(e, "a"));
      const int b = index_of(require_string(e, "b"));
      const int ap = index_of(require_string(e, "ap"));
      const int bp = index_of(require_string(e, "bp"));
      const int c = index_of(require_string(e, "c"));
      const int g = index_of(require_string(e, "g"));
      const Complex value(e.value("re", 0.0), e.value("im", 0.0));
      const double scale = std::sqrt(lax.qdim(Charge(a)) * lax.qdim(Charge(bp)) /
                                     (lax.qdim(Charge(c)) * lax.qdim(Charge(g))));
      // [F^{ab}_{a'b'}]_{cg} = sqrt(d_c d_g / d_a d_b') [F^{a'gb}_c]_{a b'}.
      data.f_symbols.push_back({ap, g, b, c, a, bp, value * scale});
    }
  }

  return std::make_shared<const AnyonModel>(std::move(data));
}

std::shared_ptr<const AnyonModel> load_model_file(const std::string& path) {
  return parse_model(load_json_file(path));
}

nlohmann::json model_to_json(const AnyonModel& model) {
  json doc;
  doc["name"] = model.name();
  json charges = json::array();
  for (const Charge c : model.charges()) charges.push_back(model.label(c));
  doc["charges"] = std::move(charges);

  json fusion = json::array();
  for (const Charge a : model.charges())
    for (const Charge b : model.charges())
      for (const Charge c : model.charges())
        if (model.fusion_multiplicity(a, b, c))
          fusion.push_back({model.label(a), model.label(b), model.label(c)});
  doc["fusion"] = std::move(fusion);

  json fs = json::array();
  for (const Charge a : model.charges())
    for (const Charge b : model.charges())
      for (const Charge ap : model.charges())
        for (const Charge bp : model.charges())
          for (const Charge c : model.charges()) {
            if (!model.fusion_multiplicity(a, b, c) || !model.fusion_multiplicity(ap, bp, c))
              continue;
            for (const Charge g : model.charges()) {
              if (!model.fusion_multiplicity(ap, g, a) || !model.fusion_multiplicity(g, b, bp))
                continue;
              const Complex v = model.f_symbol(a, b, ap, bp, c, g);
              fs.push_back({{"a", model.label(a)},
                            {"b", model.label(b)},
                            {"ap", model.label(ap)},
                            {"bp", model.label(bp)},
                            {"c", model.label(c)},
                            {"g", model.label(g)},
                            {"re", v.real()},
                            {"im", v.imag()}});
            }
          }
  doc["f_symbols"] = std::move(fs);
  return doc;
}

AnyonicDensityOperator parse_state(const nlohmann::json& doc,
                                   std::shared_ptr<const AnyonModel> model_override) {
  if (!doc.is_object()) throw ParseError("state document must be an object");

  std::shared_ptr<const AnyonModel> model = std::move(model_override);
  if (!model) {
    if (!doc.contains("model"))
      throw ParseError("state document has no \"model\" and none was supplied");
    if (doc["model"].is_string())
      model = builtin_model(doc["model"].get<std::string>());
    else
      model = parse_model(doc["model"]);
  }

  if (!doc.contains("partition")) throw ParseError("state needs a \"partition\" object");
  const json& part = doc["partition"];
  auto parse_leaves = [&](const char* key) {
    if (!part.contains(key) || !part[key].is_array() || part[key].empty())
      throw ParseError(std::string("partition needs a nonempty \"") + key + "\" array");
    std::vector<Charge> leaves;
    for (const auto& l : part[key]) leaves.push_back(model->charge(l.get<std::string>()));
    return leaves;
  };
  const auto basis = bipartite_basis(model, parse_leaves("leavesA"), parse_leaves("leavesB"));

  AnyonicDensityOperator rho(basis);
  if (!doc.contains("blocks") || !doc["blocks"].is_array())
    throw ParseError("state needs a \"blocks\" array");
  for (const auto& b : doc["blocks"]) {
    const Charge c = model->charge(require_string(b, "charge"));
    const int dim = basis->block_dim(c);
    if (!b.contains("matrix") || !b["matrix"].is_array())
      throw ParseError("block \"" + model->label(c) + "\" needs a \"matrix\" array");
    const auto& entries = b["matrix"];
    if (static_cast<int>(entries.size()) != dim * dim)
      throw ParseError("block \"" + model->label(c) + "\" must have " + std::to_string(dim * dim) +
                       " row-major [re,im] entries");
    Matrix& blk = rho.block(c);
    for (int k = 0; k < dim * dim; ++k) {
      const auto& pair = entries[k];
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("matrix entries are [re,im] pairs");
      blk(k / dim, k % dim) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
  }

  rho.validate();
  return rho;
}

AnyonicDensityOperator load_state_file(const std::string& path,
                                       std::shared_ptr<const AnyonModel> model_override) {
  return parse_state(load_json_file(path), std::move(model_override));
}

nlohmann::json state_to_json(const AnyonicDensityOperator& rho) {
  const AnyonModel& m = rho.model();
  json doc;
  if (is_builtin_name(m.name()))
    doc["model"] = m.name();
  else
    doc["model"] = model_to_json(m);

  json part;
  json la = json::array(), lb = json::array();
  for (const Charge q : rho.basis().basis_a().leaves()) la.push_back(m.label(q));
  for (const Charge q : rho.basis().basis_b().leaves()) lb.push_back(m.label(q));
  part["leavesA"] = std::move(la);
  part["leavesB"] = std::move(lb);
  doc["partition"] = std::move(part);

  json blocks = json::array();
  for (const Charge c : m.charges()) {
    const Matrix& blk = rho.block(c);
    if (blk.empty()) continue;
    json entries = json::array();
    for (int r = 0; r < blk.rows(); ++r)
      for (int s = 0; s < blk.cols(); ++s)
        entries.push_back({blk(r, s).real(), blk(r, s).imag()});
    blocks.push_back({{"charge", m.label(c)}, {"matrix", std::move(entries)}});
  }
  doc["blocks"] = std::move(blocks);
  return doc;
}

}  // namespace anyonic
