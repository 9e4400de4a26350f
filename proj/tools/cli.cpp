#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <entwine/entwine.hpp>

namespace entwine::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Human, Structured };

constexpr const char* kCatalogPrefix = "catalog:";

// "catalog:NAME" builds a catalog entry, anything else is a bundle file.
StructureBundle load_bundle_arg(const std::string& arg, bool validate) {
  if (arg.rfind(kCatalogPrefix, 0) == 0) return catalog_build(arg.substr(std::string(kCatalogPrefix).size()));
  const std::string text = read_text_file(arg);
  return validate ? parse_bundle(text) : parse_bundle_unchecked(text);
}

// "H_<object>" names the regular object of the category at that object,
// unless a file of that name exists.
AnyModule load_module_arg(const StructureBundle& b, Category cat, const std::string& arg) {
  if (arg.rfind("H_", 0) == 0 && !std::filesystem::exists(arg)) {
    const std::size_t x = b.coalgebra.index_of(arg.substr(2));
    switch (cat) {
      case Category::Comod:
        return regular_comodule(b, x);
      case Category::EntwinedComod:
        return regular_comodule(b, x, right_regular_module(b.algebra));
      case Category::Contra:
        return contramodule_HXU(b, x, 1);
      case Category::EntwinedContra:
        return contramodule_HXP(b, x, left_regular_module(b.algebra));
    }
  }
  AnyModule m = load_module(b, arg);
  if (category_of(m) != cat)
    throw ParseError("module '" + arg + "' is a " + category_name(category_of(m)) + " object, expected " +
                     category_name(cat));
  return m;
}

Json report_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"label", x.label}, {"where", x.where}, {"detail", x.detail}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Yes:
      return kYes;
    case Outcome::No:
      return kNo;
    case Outcome::Unknown:
      return kUnknown;
  }
  return kInputError;
}

void print_decision(std::ostream& out, Format fmt, const std::string& command, const StructureBundle& b,
                    const Decision& d) {
  const Json dj = Json::parse(save_decision(b, d));
  if (fmt == Format::Structured) {
    out << Json{{"command", command}, {"decision", dj}}.dump(2) << "\n";
    return;
  }
  out << command << ": " << outcome_name(d.outcome) << "\n";
  if (d.witness)
    out << "  no solution: rank " << d.witness->rank << ", augmented rank " << d.witness->augmented_rank << "\n";
  if (d.enumeration) {
    const auto& e = *d.enumeration;
    out << "  search: " << e.strategy << ", dim W1 = " << e.w1_dim << ", " << e.examined << " of "
        << e.search_space << " candidates examined" << (e.exhaustive ? " (exhaustive)" : "") << "\n";
  }
  for (const char* key : {"sigma", "lambda", "gamma", "coev"})
    if (dj.contains(key)) out << "  " << key << ": " << dj[key].dump() << "\n";
}

struct Options {
  std::string format = "human";
  std::string bundle;
  std::vector<std::string> modules;
  std::string side;
  std::uint64_t budget = FrobeniusOptions{}.budget;
  int height = FrobeniusOptions{}.height;
  unsigned threads = 0;
  std::string category;
  std::string source;
  std::string target;
  std::string name;
  std::string field;
  std::string output;
};

int cmd_check(const Options& o, Format fmt, std::ostream& out) {
  const StructureBundle b = load_bundle_arg(o.bundle, false);
  Report r = check_bundle(b);
  Json modules = Json::array();
  for (const auto& path : o.modules) {
    const AnyModule m = parse_module_unchecked(b, read_text_file(path));
    const Report mr = check_module(b, m);
    for (auto v : mr.violations) {
      v.where = path + " " + v.where;
      r.violations.push_back(std::move(v));
    }
    modules.push_back(Json{{"path", path}, {"kind", category_name(category_of(m))}, {"ok", mr.ok()}});
  }
  if (fmt == Format::Structured) {
    Json j = report_json(r);
    j["modules"] = modules;
    out << j.dump(2) << "\n";
  } else if (r.ok()) {
    out << "all axioms hold\n";
  } else {
    out << r.to_string();
    if (!r.to_string().empty() && r.to_string().back() != '\n') out << "\n";
  }
  return r.ok() ? kYes : kNo;
}

int cmd_separability(const Options& o, Format fmt, std::ostream& out) {
  const StructureBundle b = load_bundle_arg(o.bundle, true);
  const bool free_side = o.side == "F";
  const Decision d = free_side ? decide_sep_F(b) : decide_sep_G(b);
  print_decision(out, fmt, free_side ? "separable F" : "separable G", b, d);
  return outcome_code(d.outcome);
}

int cmd_frobenius(const Options& o, Format fmt, std::ostream& out) {
  const StructureBundle b = load_bundle_arg(o.bundle, true);
  FrobeniusOptions opts;
  opts.budget = o.budget;
  opts.height = o.height;
  opts.threads = o.threads;
  const Decision d = decide_frobenius(b, opts);
  print_decision(out, fmt, "frobenius", b, d);
  return outcome_code(d.outcome);
}

int cmd_cointegral(const Options& o, Format fmt, std::ostream& out) {
  const StructureBundle b = load_bundle_arg(o.bundle, true);
  const Decision d = find_cointegral(b);
  print_decision(out, fmt, "cointegral", b, d);
  return outcome_code(d.outcome);
}

int cmd_hom(const Options& o, Format fmt, std::ostream& out) {
  const StructureBundle b = load_bundle_arg(o.bundle, true);
  const Category cat = parse_category(o.category);
  const AnyModule source = load_module_arg(b, cat, o.source);
  const AnyModule target = load_module_arg(b, cat, o.target);
  const auto basis = hom_space(b, source, target);
  if (fmt == Format::Structured) {
    Json list = Json::array();
    for (const auto& f : basis) list.push_back(Json::parse(save_morphism(b, f)));
    out << Json{{"dimension", basis.size()}, {"basis", list}}.dump(2) << "\n";
  } else {
    out << "dimension " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
      out << "  [" << i << "] " << Json::parse(save_morphism(b, basis[i])).dump() << "\n";
  }
  return kYes;
}

int cmd_catalog(const Options& o, Format fmt, std::ostream& out) {
  if (o.name.empty()) {
    if (fmt == Format::Structured) {
      Json list = Json::array();
      for (const auto& e : catalog_entries())
        list.push_back(Json{{"name", e.name}, {"field", e.default_field.to_string()}, {"description", e.description}});
      out << list.dump(2) << "\n";
    } else {
      for (const auto& e : catalog_entries())
        out << e.name << "  [" << e.default_field.to_string() << "]  " << e.description << "\n";
    }
    return kYes;
  }
  std::optional<FieldSpec> field;
  if (!o.field.empty()) field = FieldSpec::parse(o.field);
  const StructureBundle b = catalog_build(o.name, field);
  if (o.output.empty()) {
    out << save_bundle(b);
  } else {
    save_bundle(b, o.output);
  }
  return kYes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks and decisions for entwining structures over a finite coalgebra."};
  app.name("entwine");
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));

  const std::string bundle_help = "Bundle file, or catalog:NAME";

  auto* check = app.add_subcommand("check", "Check the axioms of a bundle and of optional modules");
  check->add_option("bundle", o.bundle, bundle_help)->required();
  check->add_option("--module,-m", o.modules, "Module file to check against the bundle");

  auto* sep = app.add_subcommand("separability", "Decide separability of the free (F) or forgetful (G) functor");
  sep->add_option("bundle", o.bundle, bundle_help)->required();
  sep->add_option("--side", o.side, "F or G")->required()->check(CLI::IsMember({"F", "G"}));

  auto* frob = app.add_subcommand("frobenius", "Decide whether the functors form a Frobenius pair");
  frob->add_option("bundle", o.bundle, bundle_help)->required();
  frob->add_option("--budget", o.budget, "Maximum number of lambda candidates")->check(CLI::PositiveNumber);
  frob->add_option("--height", o.height, "Coefficient bound for candidates over Q")->check(CLI::NonNegativeNumber);
  frob->add_option("--threads", o.threads, "Worker threads (0: automatic)");

  auto* coint = app.add_subcommand("cointegral", "Search for a normalised cointegral");
  coint->add_option("bundle", o.bundle, bundle_help)->required();

  auto* hom = app.add_subcommand("hom", "Basis of a morphism space");
  hom->add_option("bundle", o.bundle, bundle_help)->required();
  hom->add_option("--category", o.category, "comod, entwined-comod, contra or entwined-contra")
      ->required()
      ->check(CLI::IsMember({"comod", "entwined-comod", "contra", "entwined-contra"}));
  hom->add_option("source", o.source, "Module file, or H_<object>")->required();
  hom->add_option("target", o.target, "Module file, or H_<object>")->required();

  auto* cat = app.add_subcommand("catalog", "List the catalog or emit one entry as a bundle file");
  cat->add_option("--name", o.name, "Entry name");
  cat->add_option("--field", o.field, "Field override, Q or F<p>");
  cat->add_option("--output,-o", o.output, "Write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  const Format fmt = o.format == "structured" ? Format::Structured : Format::Human;
  try {
    if (*check) return cmd_check(o, fmt, out);
    if (*sep) return cmd_separability(o, fmt, out);
    if (*frob) return cmd_frobenius(o, fmt, out);
    if (*coint) return cmd_cointegral(o, fmt, out);
    if (*hom) return cmd_hom(o, fmt, out);
    if (*cat) return cmd_catalog(o, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace entwine::cli
