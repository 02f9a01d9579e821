// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11/CLI11.hpp>

#include "metro/catalog.hpp"
#include "metro/energy.hpp"
#include "metro/mec.hpp"
#include "metro/recomposition.hpp"
#include "metro/report.hpp"
#include "metro/schema_io.hpp"
#include "metro/validation.hpp"

namespace metro::cli {
namespace {

const std::vector<std::string> kTextJson{"text", "json"};

void print_errors(std::ostream& err, const std::vector<Error>& errors) {
  for (const auto& e : errors) err << "error: " << to_string(e) << "\n";
}

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: " << to_string(Error{"E-IO", path, "cannot read file"}) << "\n";
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Model> load_model(const std::string& path, std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) return std::nullopt;
  auto doc = parse_model(*text);
  if (!doc) {
    print_errors(err, doc.errors());
    return std::nullopt;
  }
  auto model = build_model(std::move(doc).value().parts);
  if (!model) {
    print_errors(err, model.errors());
    return std::nullopt;
  }
  return std::move(model).value();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::map<FunctionalGroup, double>> parse_fractions(const std::string& s) {
  std::map<FunctionalGroup, double> out;
  for (const auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) return std::nullopt;
    auto group = parse_functional_group(item.substr(0, eq));
    if (!group) return std::nullopt;
    try {
      std::size_t used = 0;
      double v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) return std::nullopt;
      out[*group] = v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

struct Options {
  std::string model;
  std::string format = "text";
  bool strict = false;

  std::string template_id;
  bool integrated_cpe = false;
  std::string output;
  std::string operator_id = "operator";
  std::vector<std::string> site_labels;

  std::string layer;
  std::string path;
  bool hidden_only = false;

  std::string power_csv;
  std::string from;
  std::string to;
  std::string split_mode;
  std::string fractions;

  double power_w = 0.0;
  std::string space;
  bool no_ethernet = false;
};

int do_validate(const Options& o, std::ostream& out, std::ostream& err) {
  auto model = load_model(o.model, err);
  if (!model) return kUsage;
  auto diags = validate_reference_configuration(*model);
  if (o.format == "json") {
    out << diagnostics_json(diags);
  } else {
    out << diagnostics_text(diags);
    auto errors = std::count_if(diags.begin(), diags.end(),
                                [](const Diagnostic& d) { return d.severity == Severity::kError; });
    out << errors << " error(s), " << diags.size() - errors << " warning(s)\n";
    for (const auto& s : subsumption_report(*model)) {
      out << "subsumed " << s.rp_id << " in " << s.subsuming_element
          << " (not externally accessible)\n";
    }
  }
  if (has_errors(diags)) return kErrors;
  if (o.strict && !diags.empty()) return kStrictWarnings;
  return kOk;
}

int do_catalog_list(std::ostream& out) {
  out << catalog_text(list_templates());
  return kOk;
}

int do_catalog_new(const Options& o, std::ostream& err) {
  TemplateParams params;
  params.operator_id = o.operator_id;
  params.integrated_cpe = o.integrated_cpe;
  for (const auto& kv : o.site_labels) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "error: --site expects <site-id>=<label>, got '" << kv << "'\n";
      return kUsage;
    }
    params.site_labels[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  auto doc = instantiate_template(o.template_id, params);
  if (!doc) {
    print_errors(err, doc.errors());
    return kUsage;
  }
  std::ofstream file(o.output, std::ios::binary);
  file << serialize_document(*doc);
  if (!file) {
    err << "error: " << to_string(Error{"E-IO", o.output, "cannot write file"}) << "\n";
    return kUsage;
  }
  return kOk;
}

int do_recompose(const Options& o, std::ostream& out, std::ostream& err) {
  auto model = load_model(o.model, err);
  if (!model) return kUsage;
  auto coverage = serial_recomposition(*model);
  out << (o.format == "json" ? coverage_json(coverage) : coverage_text(coverage));
  return kOk;
}

int do_expand(const Options& o, std::ostream& out, std::ostream& err) {
  auto model = load_model(o.model, err);
  if (!model) return kUsage;
  auto path = split(o.path, ',');
  if (o.hidden_only) {
    auto hidden = detect_hidden_consumers(*model, o.layer, path);
    if (!hidden) {
      print_errors(err, hidden.errors());
      return kUsage;
    }
    out << (o.format == "json" ? hidden_json(*hidden) : hidden_text(*hidden));
    return kOk;
  }
  auto trace = expand_path(*model, o.layer, path);
  if (!trace) {
    print_errors(err, trace.errors());
    return kUsage;
  }
  out << (o.format == "json" ? path_trace_json(*trace) : path_trace_text(*trace));
  return kOk;
}

int do_attribute(const Options& o, std::ostream& out, std::ostream& err) {
  auto from = parse_utc(o.from);
  auto to = parse_utc(o.to);
  if (!from || !to) {
    err << "error: --from/--to expect UTC seconds or YYYY-MM-DDTHH:MM:SSZ\n";
    return kUsage;
  }
  SplitPolicy policy;
  if (!o.fractions.empty()) {
    auto fr = parse_fractions(o.fractions);
    if (!fr) {
      err << "error: --fractions expects GROUP=fraction[,GROUP=fraction...]\n";
      return kUsage;
    }
    policy.declared_fractions = *fr;
    policy.mode = SplitMode::kDeclared;
  }
  if (!o.split_mode.empty()) policy.mode = *parse_split_mode(o.split_mode);

  auto model = load_model(o.model, err);
  if (!model) return kUsage;
  auto csv = read_file(o.power_csv, err);
  if (!csv) return kUsage;
  auto profiles = parse_power_csv(*csv, *model);
  if (!profiles) {
    print_errors(err, profiles.errors());
    return kUsage;
  }
  auto coverage = serial_recomposition(*model);
  auto report = attribute_energy(*model, coverage, *profiles, {*from, *to}, policy);
  if (!report) {
    print_errors(err, report.errors());
    return kErrors;
  }
  if (o.format == "json") {
    out << energy_json(*report);
  } else if (o.format == "csv") {
    out << energy_csv(*report, *model);
  } else {
    out << energy_text(*report);
  }
  return kOk;
}

int do_mec(const Options& o, std::ostream& out, std::ostream& err) {
  MecDemand demand;
  demand.required_power_w = o.power_w;
  demand.requires_ethernet = !o.no_ethernet;
  if (!o.space.empty()) demand.required_space_class = *parse_space_class(o.space);
  auto model = load_model(o.model, err);
  if (!model) return kUsage;
  auto ranked = rank_sites(*model, demand);
  out << (o.format == "json" ? candidacy_json(ranked) : candidacy_text(ranked));
  return kOk;
}

std::vector<std::string> space_classes() {
  std::vector<std::string> out;
  for (auto c : {SpaceClass::kCabinet, SpaceClass::kPedestal, SpaceClass::kVault,
                 SpaceClass::kServiceRoom, SpaceClass::kCentralOffice, SpaceClass::kHeadend,
                 SpaceClass::kCustomerPremises, SpaceClass::kStreetNode, SpaceClass::kOther}) {
    out.emplace_back(to_string(c));
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Layered metro-network model: lint, recomposition, energy attribution, MEC"};
  app.name("metromodel");
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check reference-point placement rules");
  validate->add_option("model", o.model, "Model document")->required();
  validate->add_flag("--strict", o.strict, "Exit 2 when only warnings are found");
  validate->add_option("--format", o.format)->check(CLI::IsMember(kTextJson));

  auto* catalog = app.add_subcommand("catalog", "Reference-configuration templates");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List templates");
  auto* create = catalog->add_subcommand("new", "Write a template as a model document");
  create->add_option("template", o.template_id, "Template id")->required();
  create->add_flag("--integrated-cpe", o.integrated_cpe,
                   "Merge the network termination with the residential gateway");
  create->add_option("-o,--output", o.output, "Output file")->required();
  create->add_option("--operator", o.operator_id, "Operator id for network segments");
  create->add_option("--site", o.site_labels, "Site location label, <site-id>=<label>");

  auto* recompose = app.add_subcommand("recompose", "Assign energy consumers to segments");
  recompose->add_option("model", o.model, "Model document")->required();
  recompose->add_option("--format", o.format)->check(CLI::IsMember(kTextJson));

  auto* expand = app.add_subcommand("expand", "Expand a path down to the media layer");
  expand->add_option("model", o.model, "Model document")->required();
  expand->add_option("--layer", o.layer, "Layer of the requested path")->required();
  expand->add_option("--path", o.path, "Comma-separated element ids")->required();
  expand->add_flag("--hidden-only", o.hidden_only, "Print only hidden powered elements");
  expand->add_option("--format", o.format)->check(CLI::IsMember(kTextJson));

  auto* attribute = app.add_subcommand("attribute", "Attribute measured energy to segments");
  attribute->add_option("model", o.model, "Model document")->required();
  attribute->add_option("--power", o.power_csv, "Power profile CSV")->required();
  attribute->add_option("--from", o.from, "Interval start (UTC)")->required();
  attribute->add_option("--to", o.to, "Interval end (UTC)")->required();
  attribute->add_option("--split", o.split_mode, "Subsumed-RP split policy")
      ->check(CLI::IsMember({"declared", "equal", "deny"}));
  attribute->add_option("--fractions", o.fractions, "Declared split, e.g. ONU=0.7,RG=0.3");
  attribute->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* mec = app.add_subcommand("mec", "Rank sites for edge-compute hosting");
  mec->add_option("model", o.model, "Model document")->required();
  mec->add_option("--power-w", o.power_w, "Required power in W")
      ->required()
      ->check(CLI::NonNegativeNumber);
  mec->add_option("--space", o.space, "Minimum space class")
      ->check(CLI::IsMember(space_classes()));
  mec->add_flag("--no-ethernet", o.no_ethernet, "Do not require an Ethernet uplink");
  mec->add_option("--format", o.format)->check(CLI::IsMember(kTextJson));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    CLI::App* shown = &app;
    for (auto* sub : app.get_subcommands()) {
      shown = sub;
      for (auto* nested : sub->get_subcommands()) shown = nested;
    }
    err << shown->help();
    return kUsage;
  }

  if (validate->parsed()) return do_validate(o, out, err);
  if (list->parsed()) return do_catalog_list(out);
  if (create->parsed()) return do_catalog_new(o, err);
  if (recompose->parsed()) return do_recompose(o, out, err);
  if (expand->parsed()) return do_expand(o, out, err);
  if (attribute->parsed()) return do_attribute(o, out, err);
  if (mec->parsed()) return do_mec(o, out, err);
  err << app.help();
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"metromodel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace metro::cli
