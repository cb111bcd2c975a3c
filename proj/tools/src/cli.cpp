#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <hforge/hforge.hpp>

#include "hforge_tools/cli.hpp"
#include "hforge_tools/experiments.hpp"
#include "hforge_tools/render.hpp"

namespace hforge::tools
{

using nlohmann::ordered_json;

namespace
{

constexpr char const *tool_name = "hurwitz-forge";
constexpr char const *tool_version = "0.1.0";

constexpr char const *open_question_note =
  "No cover shape satisfies the hypotheses at this degree, although a "
  "suitable divisor is expected for every d >= 12g+4. This is the documented "
  "open question on odd degrees near the bound (README, \"Open question: odd "
  "degrees near the bound\").";

// Exit code 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

TupleDocument load(std::string const &path)
{
  try {
    return read_tuple_file(path);
  } catch (ParseError const &e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.what());
  } catch (SchemaError const &e) {
    std::string msg = path + ": schema violation";
    for (auto const &issue : e.issues())
      msg += "\n  - " + issue;
    throw UsageError(msg);
  } catch (DegreeMismatch const &e) {
    throw UsageError(path + ": " + e.what());
  } catch (std::runtime_error const &e) {
    throw UsageError(e.what());
  }
}

void write_file(std::string const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

ordered_json tuple_meta(RunConfig const &config, Certificate const &cert)
{
  ordered_json meta;
  meta["tool"] = tool_name;
  meta["version"] = tool_version;
  meta["command"] = config.command;
  meta["seed"] = config.seed;
  meta["budget"] = config.budget;
  meta["certificate"] = to_json(cert);
  return meta;
}

CommandOutcome cmd_validate(RunConfig const &config)
{
  auto doc = load(config.inputs.front());
  auto cert = validate(doc.tuple);

  CommandOutcome res;
  res.result["verdict"] = std::string(to_string(cert.verdict));
  res.result["certificate"] = to_json(cert);
  res.exit_code = cert.positive() ? exit_success : exit_negative;
  return res;
}

CommandOutcome cmd_genus(RunConfig const &config)
{
  auto doc = load(config.inputs.front());
  auto cert = validate(doc.tuple);

  CommandOutcome res;
  if (!cert.positive()) {
    res.result["verdict"] = std::string(to_string(cert.verdict));
    res.result["certificate"] = to_json(cert);
    res.exit_code = exit_negative;
    return res;
  }

  auto g = genus(doc.tuple);
  res.result["degree"] = doc.tuple.degree();
  res.result["entries"] = doc.tuple.size();
  res.result["ramification_total"] = ramification_total(doc.tuple);
  res.result["genus"] = g;
  res.text = std::to_string(g) + "\n";
  return res;
}

CommandOutcome cmd_group(RunConfig const &config)
{
  auto doc = load(config.inputs.front());
  if (doc.tuple.size() == 0u)
    throw UsageError(config.inputs.front() + ": tuple has no entries");

  auto group = monodromy_group(doc.tuple);
  bool transitive = is_transitive(group);

  CommandOutcome res;
  auto &r = res.result;
  r["degree"] = group.degree();
  r["generators"] = group.generators().size();
  r["order"] = group.order().str();
  r["base"] = group.base();
  r["basic_orbit_lengths"] = group.basic_orbit_lengths();
  r["transitive"] = transitive;
  if (transitive) {
    auto blocks = find_block_system(group);
    r["primitive"] = !blocks.has_value();
    r["block_system"] = blocks ? ordered_json(blocks->blocks) : ordered_json();
  } else {
    r["primitive"] = false;
    r["block_system"] = nullptr;
  }
  r["alternating"] = is_alternating(group);
  r["symmetric"] = is_symmetric(group);
  r["lemma1"] = to_json(lemma1_certify(group));
  return res;
}

CommandOutcome cmd_refine(RunConfig const &config)
{
  auto doc = load(config.inputs.front());
  auto const &t = doc.tuple;

  if (config.keep && (*config.keep < 1u || *config.keep > t.size()))
    throw UsageError("--keep " + std::to_string(*config.keep) +
                     " out of range 1.." + std::to_string(t.size()));

  CommandOutcome res;
  std::optional<Refinement> refined;
  try {
    refined = config.keep ? refine_all_but(t, *config.keep - 1u)
                          : refine_to_simple(t);
  } catch (std::invalid_argument const &e) {
    res.result["refined"] = nullptr;
    res.result["reason"] = e.what();
    res.exit_code = exit_negative;
    return res;
  }

  auto const &out = refined->tuple;
  auto &r = res.result;
  r["source_entries"] = t.size();
  r["entries"] = out.size();
  r["genus"] = genus(out);
  r["source_genus"] = genus(t);
  r["simple"] = is_simple_tuple(out);
  r["product_identity"] = out.product().is_identity();
  r["containment"] = monodromy_containment(t, out);

  auto prov = ordered_json::array();
  for (std::size_t i = 0u; i < out.size(); ++i) {
    auto const &p = refined->provenance[i];
    ordered_json row;
    row["entry"] = i + 1u;
    row["permutation"] = out[i].str();
    row["source_entry"] = p.original_entry + 1u;
    row["cycle"] = p.cycle ? ordered_json(*p.cycle + 1u) : ordered_json();
    row["factor"] = p.factor ? ordered_json(*p.factor + 1u) : ordered_json();
    prov.push_back(std::move(row));
  }
  r["provenance"] = std::move(prov);
  r["tuple"] = tuple_to_json(out);

  if (!config.tuple_out.empty()) {
    ordered_json meta;
    meta["tool"] = tool_name;
    meta["version"] = tool_version;
    meta["command"] = config.command;
    meta["source"] = config.inputs.front();
    write_file(config.tuple_out, emit_tuple(out, meta));
  }
  return res;
}

CommandOutcome cmd_search(RunConfig const &config, unsigned threads)
{
  if (config.poles.empty() || config.poles.size() > 3u ||
      std::find(config.poles.begin(), config.poles.end(), 0u) != config.poles.end())
    throw UsageError("--poles needs 1 to 3 positive multiplicities");

  CoverShape shape(config.genus, config.poles);
  bool smoke = config.genus == 0u;
  auto feasibility = check_prop4_hypotheses(shape, smoke);

  CommandOutcome res;
  auto &r = res.result;
  r["shape"] = to_json(shape);
  r["smoke_mode"] = smoke;
  r["feasibility"] = to_json(feasibility);

  if (!feasibility.positive()) {
    r["found"] = false;
    r["verdict"] = std::string(to_string(feasibility.verdict));
    res.exit_code = exit_negative;
    return res;
  }

  SearchOptions options;
  options.seed = config.seed;
  options.budget = config.budget;
  options.threads = threads;
  options.allow_genus_zero = smoke;
  auto found = search_simple_odd_tuple(shape, options);

  r["found"] = found.tuple.has_value();
  r["verdict"] = std::string(to_string(found.certificate.verdict));
  r["method"] = found.stats.method;
  r["trials"] = found.stats.trials;
  r["chunks"] = found.stats.chunks;
  r["skeleton_attempts"] = found.stats.skeleton_attempts;
  r["winning_chunk"] = found.stats.winning_chunk
                         ? ordered_json(*found.stats.winning_chunk)
                         : ordered_json();
  if (found.tuple) {
    r["group_order"] = monodromy_group(*found.tuple).order().str();
    r["tuple"] = tuple_to_json(*found.tuple);
  } else {
    r["group_order"] = nullptr;
    r["tuple"] = nullptr;
  }
  r["certificate"] = to_json(found.certificate);

  if (found.tuple && !config.tuple_out.empty())
    write_file(config.tuple_out,
               emit_tuple(*found.tuple, tuple_meta(config, found.certificate)));

  res.exit_code = found.tuple && found.certificate.positive() ? exit_success
                                                              : exit_negative;
  return res;
}

ordered_json shape_row(CoverShape const &shape)
{
  auto row = to_json(shape);
  row["dim_H"] = dim_H(shape);
  row["dim_F_XD"] = dim_F_XD(shape);
  return row;
}

CommandOutcome cmd_shapes(RunConfig const &config)
{
  auto shapes = enumerate_cover_shapes(config.genus, config.degree,
                                       config.with_k1);
  CommandOutcome res;
  auto &r = res.result;
  r["genus"] = config.genus;
  r["degree"] = config.degree;
  r["include_k1"] = config.with_k1;
  r["count"] = shapes.size();

  auto rows = ordered_json::array();
  for (auto const &s : shapes)
    rows.push_back(shape_row(s));
  r["shapes"] = std::move(rows);

  if (shapes.empty()) {
    r["note"] = open_question_note;
    if (!config.with_k1) {
      auto k1 = enumerate_cover_shapes(config.genus, config.degree, true);
      if (!k1.empty())
        r["k1_shapes_available"] = k1.size();
    }
    res.exit_code = exit_negative;
  }
  return res;
}

CommandOutcome cmd_dims(RunConfig const &config)
{
  CommandOutcome res;
  auto &r = res.result;
  unsigned g = config.genus, d = config.degree;
  r["genus"] = g;
  r["degree"] = d;

  bool in_range = d >= 12u * g + 4u;
  r["degree_condition"] = "d >= 12g+4";
  r["degree_condition_holds"] = in_range;
  r["dim_F_Xd"] = in_range ? ordered_json(dim_F_Xd(g, d)) : ordered_json();
  r["branch_bound"] = to_json(hurwitz_branch_bound(g, d));

  auto shapes = enumerate_cover_shapes(g, d, config.with_k1);
  auto rows = ordered_json::array();
  for (auto const &s : shapes) {
    auto row = shape_row(s);
    if (in_range)
      row["dim_F_XD_plus_k"] = dim_F_XD(s) + static_cast<int>(s.k());
    rows.push_back(std::move(row));
  }
  r["shapes"] = std::move(rows);
  if (shapes.empty())
    r["note"] = open_question_note;

  res.exit_code = in_range ? exit_success : exit_negative;
  return res;
}

CommandOutcome cmd_lemma1_stress(RunConfig const &config)
{
  auto report = lemma1_stress(config.min_degree, config.max_degree,
                              config.trials, config.seed);
  CommandOutcome res;
  res.result = to_json(report);
  res.exit_code = report.ok() ? exit_success : exit_negative;
  return res;
}

CommandOutcome cmd_decomp_test(RunConfig const &config)
{
  auto report = decomp_test(config.trials, config.seed);
  CommandOutcome res;
  res.result = to_json(report);
  res.exit_code = report.ok() ? exit_success : exit_negative;
  return res;
}

unsigned threads_from_env()
{
  char const *value = std::getenv("HURWITZ_FORGE_THREADS");
  if (value == nullptr || *value == '\0')
    return 1u;

  std::string text(value);
  if (text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 6u || std::stoul(text) == 0u)
    throw UsageError("HURWITZ_FORGE_THREADS must be a positive integer, got \"" +
                     text + "\"");
  return static_cast<unsigned>(std::stoul(text));
}

void parse_degree_range(std::string const &text, RunConfig &config)
{
  auto sep = text.find_first_of("-.:");
  try {
    if (sep == std::string::npos) {
      config.min_degree = config.max_degree = std::stoul(text);
    } else {
      auto rest = text.find_first_not_of("-.:", sep);
      if (rest == std::string::npos)
        throw std::invalid_argument(text);
      config.min_degree = std::stoul(text.substr(0u, sep));
      config.max_degree = std::stoul(text.substr(rest));
    }
  } catch (std::logic_error const &) {
    throw UsageError("--degree-range expects LO-HI, got \"" + text + "\"");
  }
  if (config.min_degree < 5u || config.max_degree < config.min_degree ||
      config.max_degree > 64u)
    throw UsageError("--degree-range must satisfy 5 <= LO <= HI <= 64");
}

} // namespace

ordered_json report_header(RunConfig const &config)
{
  ordered_json h;
  h["tool"] = tool_name;
  h["version"] = tool_version;
  h["command"] = config.command;
  h["seed"] = config.seed;
  h["budget"] = config.budget;

  ordered_json p = ordered_json::object();
  auto const &c = config.command;
  if (c == "validate" || c == "genus" || c == "group" || c == "refine")
    p["input"] = config.inputs.front();
  if (c == "refine")
    p["keep"] = config.keep ? ordered_json(*config.keep) : ordered_json();
  if (c == "search" || c == "shapes" || c == "dims")
    p["genus"] = config.genus;
  if (c == "search")
    p["poles"] = config.poles;
  if (c == "shapes" || c == "dims") {
    p["degree"] = config.degree;
    p["with_k1"] = config.with_k1;
  }
  if (c == "lemma1-stress")
    p["degree_range"] = {config.min_degree, config.max_degree};
  if (c == "lemma1-stress" || c == "decomp-test")
    p["trials"] = config.trials;
  h["parameters"] = std::move(p);
  return h;
}

CommandOutcome run_command(RunConfig const &config, unsigned threads)
{
  auto const &c = config.command;
  if (c == "validate")
    return cmd_validate(config);
  if (c == "genus")
    return cmd_genus(config);
  if (c == "group")
    return cmd_group(config);
  if (c == "refine")
    return cmd_refine(config);
  if (c == "search")
    return cmd_search(config, threads);
  if (c == "shapes")
    return cmd_shapes(config);
  if (c == "dims")
    return cmd_dims(config);
  if (c == "lemma1-stress")
    return cmd_lemma1_stress(config);
  if (c == "decomp-test")
    return cmd_decomp_test(config);
  throw UsageError("unknown command " + c);
}

int run_cli(std::vector<std::string> const &args, std::ostream &out,
            std::ostream &err)
{
  RunConfig config;
  std::string format = "table";
  std::string degree_range = "5-12";

  CLI::App app{"Hurwitz tuple toolkit: monodromy certificates, cover shapes "
               "and seeded searches.",
               tool_name};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"table", "json"}))
    ->capture_default_str();
  app.add_option("--out", config.out, "Write the report to this file");

  auto input = [&](CLI::App *sub) {
    sub->add_option("file", config.inputs, "Tuple file")->required();
  };

  auto *validate_cmd = app.add_subcommand("validate", "Check a tuple file");
  input(validate_cmd);
  auto *genus_cmd = app.add_subcommand("genus", "Riemann-Hurwitz genus of a tuple");
  input(genus_cmd);
  auto *group_cmd = app.add_subcommand("group", "Monodromy group of a tuple");
  input(group_cmd);

  auto *refine_cmd = app.add_subcommand("refine", "Split entries into 3-cycles");
  input(refine_cmd);
  refine_cmd->add_option("--keep", config.keep, "1-based entry to leave intact");
  refine_cmd->add_option("--tuple-out", config.tuple_out,
                         "Write the refined tuple file here");

  auto *search_cmd = app.add_subcommand("search", "Seeded search for a simple odd tuple");
  search_cmd->add_option("--genus", config.genus, "Genus g")->required();
  search_cmd->add_option("--poles", config.poles, "Multiplicities n1,n2[,n3]")
    ->required()
    ->delimiter(',');
  search_cmd->add_option("--seed", config.seed)->capture_default_str();
  search_cmd->add_option("--budget", config.budget, "Rejection-sampling trials")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  search_cmd->add_option("--tuple-out", config.tuple_out,
                         "Write the witness tuple file here");

  auto *shapes_cmd = app.add_subcommand("shapes", "Enumerate feasible cover shapes");
  auto *dims_cmd = app.add_subcommand("dims", "Dimension counts and branch bounds");
  for (auto *sub : {shapes_cmd, dims_cmd}) {
    sub->add_option("--genus", config.genus)->required();
    sub->add_option("--degree", config.degree)->required();
    sub->add_flag("--with-k1", config.with_k1, "Also admit k = 1 shapes");
  }

  auto *stress_cmd = app.add_subcommand("lemma1-stress",
                                        "A_d recognition checked against group orders");
  stress_cmd->add_option("--degree-range", degree_range, "LO-HI")
    ->capture_default_str();
  stress_cmd->add_option("--trials", config.trials, "Accepted groups per degree")
    ->default_val(500u);
  stress_cmd->add_option("--seed", config.seed)->capture_default_str();

  auto *decomp_cmd = app.add_subcommand("decomp-test",
                                        "Wreath decomposability experiment");
  decomp_cmd->add_option("--trials", config.trials, "Composite tuples")
    ->default_val(200u);
  decomp_cmd->add_option("--seed", config.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_success : exit_usage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::json : Format::table;

  try {
    if (config.command == "lemma1-stress")
      parse_degree_range(degree_range, config);

    unsigned threads = threads_from_env();
    auto outcome = run_command(config, threads);

    ordered_json report;
    report["header"] = report_header(config);
    report["result"] = outcome.result;

    std::string text;
    if (config.format == Format::json)
      text = report.dump(2) + "\n";
    else
      text = outcome.text ? *outcome.text : render_text(report);

    if (config.out.empty())
      out << text;
    else
      write_file(config.out, text);
    return outcome.exit_code;
  } catch (UsageError const &e) {
    err << tool_name << ": error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::invalid_argument const &e) {
    err << tool_name << ": error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const &e) {
    err << tool_name << ": error: " << e.what() << '\n';
    return exit_negative;
  }
}

} // namespace hforge::tools
