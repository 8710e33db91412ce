#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/program_options.hpp>

#include "checks.hpp"
#include "reqc/reqc.hpp"

namespace po = boost::program_options;

namespace reqc::cli {

namespace {

// Flag spellings accepted on the command line in addition to the config
// keys.
std::string canonical_flag(const std::string& arg) {
  static const std::vector<std::pair<std::string, std::string>> aliases{
      {"--g", "--coupling"}};
  for (const auto& [alias, name] : aliases) {
    if (arg == alias) return name;
    if (arg.rfind(alias + "=", 0) == 0) return name + arg.substr(alias.size());
  }
  return arg;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("REQCSIM_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid REQCSIM_SEED value '") + env + "'");
  }
}

po::options_description option_table(RunConfig& c) {
  const RunConfig d;
  po::options_description general("General");
  general.add_options()
      ("output,o", po::value(&c.output)->default_value(d.output),
       "CSV output path ('-' for stdout)")
      ("jobs,j", po::value(&c.jobs)->default_value(d.jobs),
       "worker threads")
      ("seed", po::value(&c.seed)->default_value(default_seed()),
       "master seed (default from REQCSIM_SEED)");

  po::options_description sweep("fidelity-sweep");
  sweep.add_options()
      ("variant", po::value(&c.variant)->default_value(d.variant),
       "simple | symmetrized | symmetrized_bb1")
      ("coupling", po::value(&c.coupling)->default_value(d.coupling),
       "coupling g12 in units of Omega0 (flag alias --g)")
      ("delta-range", po::value(&c.delta_range)->default_value(d.delta_range),
       "detuning grid lo:hi:step")
      ("omega-range", po::value(&c.omega_range)->default_value(d.omega_range),
       "Rabi ratio grid lo:hi:step; auto = 0.85:1.15:0.005, "
       "or 0.97:1.03:0.001 for the simple variant");

  po::options_description cat("cat-parity");
  cat.add_options()
      ("n", po::value(&c.n)->default_value(d.n), "qubits in the star")
      ("phis", po::value(&c.phis)->default_value(d.phis),
       "rotation angles lo:hi:step or comma list")
      ("delta-width", po::value(&c.delta_width)->default_value(d.delta_width),
       "detuning half-width of the ensemble")
      ("omega-width", po::value(&c.omega_width)->default_value(d.omega_width),
       "relative Rabi half-width of the ensemble")
      ("g-min", po::value(&c.g_min)->default_value(d.g_min),
       "smallest bus coupling (log-uniform)")
      ("g-max", po::value(&c.g_max)->default_value(d.g_max),
       "largest bus coupling (log-uniform)")
      ("instances", po::value(&c.instances)->default_value(d.instances),
       "ensemble members")
      ("cps", po::value(&c.cps)->default_value(d.cps),
       "CPS used inside CNOTs: simple | symmetrized")
      ("policy", po::value(&c.policy)->default_value(d.policy),
       "pulse policy: plain | bb1");

  po::options_description yield("yield");
  yield.add_options()
      ("ion-count", po::value(&c.ion_count)->default_value(d.ion_count),
       "dopant ions in the box")
      ("box-side", po::value(&c.box_side)->default_value(d.box_side),
       "box edge length")
      ("dipole-constant",
       po::value(&c.dipole_constant)->default_value(d.dipole_constant),
       "C in g = C / r^3")
      ("channels", po::value(&c.channels)->default_value(d.channels),
       "number of channels")
      ("channel-probability",
       po::value(&c.channel_probability)->default_value(d.channel_probability),
       "probability of an ion joining a given channel")
      ("p", po::value(&c.target_p)->default_value(d.target_p, "0.1"),
       "target coupling probability used when threshold = auto")
      ("threshold", po::value(&c.threshold)->default_value(d.threshold),
       "coupling threshold g_t, or auto")
      ("n-values", po::value(&c.n_values)->default_value(d.n_values),
       "star sizes, comma list")
      ("seeds", po::value(&c.seed_count)->default_value(d.seed_count),
       "crystals sampled per n")
      ("angular", po::value(&c.angular)->default_value(d.angular),
       "include the |1 - 3cos^2| angular factor");

  po::options_description all;
  all.add(general).add(sweep).add(cat).add(yield);
  return all;
}

void check_choice(const std::string& value, const char* key,
                  std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (value == a) return;
  throw ConfigError("invalid value '" + value + "' for option '" + key + "'");
}

PulsePolicy policy_of(const RunConfig& c) {
  return c.policy == "bb1" ? PulsePolicy::bb1 : PulsePolicy::plain;
}

CpsVariant cps_of(const RunConfig& c) {
  return c.cps == "simple" ? CpsVariant::simple : CpsVariant::symmetrized;
}

std::vector<int> parse_ints(const std::string& text, const char* key) {
  std::vector<int> out;
  for (double v : parse_values(text, key)) {
    if (v != std::floor(v)) {
      throw ConfigError(std::string("invalid value '") + text +
                        "' for option '" + key + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void write_output(const RunConfig& c, const std::string& text,
                  std::ostream& out) {
  if (c.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + c.output + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + c.output + "'");
}

void require_output(const RunConfig& c) {
  if (c.output.empty()) {
    throw ConfigError("missing required option 'output' for " + c.subcommand);
  }
}

std::string run_sweep(const RunConfig& c) {
  SweepGrid grid;
  grid.variant = *parse_sweep_variant(c.variant);
  grid.coupling = c.coupling;
  grid.deltas = parse_values(c.delta_range, "delta-range");
  if (c.omega_range == "auto") {
    grid.omegas = default_sweep_grid(grid.variant).omegas;
  } else {
    grid.omegas = parse_values(c.omega_range, "omega-range");
  }
  std::string csv = "delta,omega,fidelity\n";
  for (const SweepPoint& p : sweep_cps_fidelity(grid, c.jobs)) {
    csv += format_double(p.delta) + "," + format_double(p.omega) + "," +
           format_double(p.fidelity) + "\n";
  }
  return csv;
}

std::string run_cat(const RunConfig& c) {
  EnsembleSpec ensemble;
  ensemble.delta_halfwidth = c.delta_width;
  ensemble.omega_relative_halfwidth = c.omega_width;
  ensemble.g_min = c.g_min;
  ensemble.g_max = c.g_max;
  ensemble.n_instances = c.instances;
  ensemble.seed = c.seed;
  CatOptions options;
  options.gates = {cps_of(c), policy_of(c)};
  options.jobs = c.jobs;
  std::vector<double> phis = parse_values(c.phis, "phis");
  std::sort(phis.begin(), phis.end());
  std::string csv = "phi,mean_excited,parity\n";
  for (const ParityRow& row : run_cat_experiment(c.n, phis, ensemble, options)) {
    csv += format_double(row.phi) + "," + format_double(row.mean_excited) +
           "," + format_double(row.parity) + "\n";
  }
  return csv;
}

std::string run_yield(const RunConfig& c) {
  CrystalModel model;
  model.box_side = c.box_side;
  model.ion_count = c.ion_count;
  model.dipole_constant = c.dipole_constant;
  model.channel_count = c.channels;
  model.channel_probability = c.channel_probability;
  model.angular = c.angular;
  model.star_size = 2;
  if (c.threshold == "auto") {
    model.threshold = threshold_for_p(model, c.target_p);
  } else {
    model.threshold = parse_values(c.threshold, "threshold").at(0);
  }
  if (c.seed_count < 1) throw std::domain_error("seeds must be >= 1");
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < c.seed_count; ++k)
    seeds.push_back(c.seed + static_cast<std::uint64_t>(k));
  std::vector<int> ns = parse_ints(c.n_values, "n-values");
  std::sort(ns.begin(), ns.end());
  const YieldResult result = yield_scaling(model, ns, seeds, c.jobs);
  const std::string slope =
      result.slope ? format_double(*result.slope) : std::string("nan");
  std::string csv = "n,mean_count,estimated_p,fitted_slope,log_p\n";
  for (std::size_t k = 0; k < ns.size(); ++k) {
    csv += std::to_string(ns[k]) + "," + format_double(result.mean_counts[k]) +
           "," + format_double(result.estimated_p) + "," + slope + "," +
           format_double(std::log(result.estimated_p)) + "\n";
  }
  return csv;
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

std::vector<double> parse_values(const std::string& text, const char* key) {
  auto fail = [&] {
    return ConfigError("invalid value '" + text + "' for option '" + key + "'");
  };
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v)) throw fail();
      return v;
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw fail();
    }
  };
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  if (parts.empty()) throw fail();
  if (sep == ':') {
    if (parts.size() != 3) throw fail();
    const double lo = number(parts[0]), hi = number(parts[1]),
                 step = number(parts[2]);
    if (!(step > 0.0) || hi < lo) throw fail();
    return stepped_range(lo, hi, step);
  }
  std::vector<double> out;
  for (const std::string& p : parts) out.push_back(number(p));
  return out;
}

bool parse_config(const std::vector<std::string>& args, RunConfig& config,
                  std::ostream& out) {
  config = RunConfig{};
  po::options_description options = option_table(config);

  std::string config_path;
  bool help = false;
  po::options_description cmdline_only("Command line");
  cmdline_only.add_options()
      ("help,h", po::bool_switch(&help), "show this help and exit")
      ("config", po::value(&config_path), "read key = value defaults from file")
      ("subcommand", po::value(&config.subcommand), "subcommand");
  po::options_description cmdline;
  cmdline.add(cmdline_only).add(options);
  po::positional_options_description positional;
  positional.add("subcommand", 1);

  std::vector<std::string> argv;
  for (std::size_t k = 1; k < args.size(); ++k)
    argv.push_back(canonical_flag(args[k]));

  po::variables_map vm;
  try {
    po::store(po::command_line_parser(argv)
                  .options(cmdline)
                  .positional(positional)
                  .style(po::command_line_style::default_style &
                         ~po::command_line_style::allow_guessing)
                  .run(),
              vm);
    if (vm.count("config")) {
      const std::string path = vm["config"].as<std::string>();
      std::ifstream file(path);
      if (!file) throw ConfigError("cannot read config file '" + path + "'");
      po::store(po::parse_config_file(file, options, false), vm);
    }
    po::notify(vm);
  } catch (const po::error& e) {
    throw ConfigError(e.what());
  }

  if (help) {
    out << "usage: reqcsim <subcommand> [options]\n\nsubcommands:";
    for (const auto& s : subcommands()) out << ' ' << s;
    out << "\n\n" << cmdline_only << options << '\n';
    return false;
  }

  if (config.subcommand.empty()) {
    throw ConfigError("missing subcommand");
  }
  if (std::find(subcommands().begin(), subcommands().end(),
                config.subcommand) == subcommands().end()) {
    throw ConfigError("unknown subcommand '" + config.subcommand + "'");
  }
  check_choice(config.variant, "variant",
               {"simple", "symmetrized", "symmetrized_bb1"});
  check_choice(config.cps, "cps", {"simple", "symmetrized"});
  check_choice(config.policy, "policy", {"plain", "bb1"});
  parse_values(config.delta_range, "delta-range");
  if (config.omega_range != "auto") parse_values(config.omega_range, "omega-range");
  parse_values(config.phis, "phis");
  parse_ints(config.n_values, "n-values");
  if (config.threshold != "auto") parse_values(config.threshold, "threshold");
  if (config.jobs < 1) throw ConfigError("invalid value '0' for option 'jobs'");
  return true;
}

std::string render_config(const RunConfig& c) {
  auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::ostringstream s;
  s << "# reqcsim " << c.subcommand << "\n";
  if (!c.output.empty()) s << "output = " << c.output << "\n";
  s << "jobs = " << c.jobs << "\n"
    << "seed = " << c.seed << "\n"
    << "variant = " << c.variant << "\n"
    << "coupling = " << num(c.coupling) << "\n"
    << "delta-range = " << c.delta_range << "\n"
    << "omega-range = " << c.omega_range << "\n"
    << "n = " << c.n << "\n"
    << "phis = " << c.phis << "\n"
    << "delta-width = " << num(c.delta_width) << "\n"
    << "omega-width = " << num(c.omega_width) << "\n"
    << "g-min = " << num(c.g_min) << "\n"
    << "g-max = " << num(c.g_max) << "\n"
    << "instances = " << c.instances << "\n"
    << "cps = " << c.cps << "\n"
    << "policy = " << c.policy << "\n"
    << "ion-count = " << c.ion_count << "\n"
    << "box-side = " << num(c.box_side) << "\n"
    << "dipole-constant = " << num(c.dipole_constant) << "\n"
    << "channels = " << c.channels << "\n"
    << "channel-probability = " << num(c.channel_probability) << "\n"
    << "p = " << num(c.target_p) << "\n"
    << "threshold = " << c.threshold << "\n"
    << "n-values = " << c.n_values << "\n"
    << "seeds = " << c.seed_count << "\n"
    << "angular = " << (c.angular ? "true" : "false") << "\n";
  return s.str();
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "fidelity-sweep") {
      require_output(c);
      write_output(c, run_sweep(c), out);
      return kExitOk;
    }
    if (c.subcommand == "cat-parity") {
      require_output(c);
      write_output(c, run_cat(c), out);
      return kExitOk;
    }
    if (c.subcommand == "yield") {
      require_output(c);
      write_output(c, run_yield(c), out);
      return kExitOk;
    }
    const std::vector<CheckResult> results = c.subcommand == "gate-check"
                                                 ? gate_checks(c.coupling)
                                                 : selftest_checks(c.seed);
    bool ok = true;
    std::string csv = "check,value,limit,pass\n";
    for (const CheckResult& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << "  value="
          << format_double(r.value) << "  limit=" << format_double(r.limit)
          << '\n';
      csv += r.name + "," + format_double(r.value) + "," +
             format_double(r.limit) + "," + (r.pass ? "1" : "0") + "\n";
      ok = ok && r.pass;
    }
    if (!c.output.empty()) write_output(c, csv, out);
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const IoError& e) {
    err << "reqcsim: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "reqcsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "reqcsim: invalid physics parameters: " << e.what() << '\n';
    return kExitPhysics;
  } catch (const std::invalid_argument& e) {
    err << "reqcsim: invalid physics parameters: " << e.what() << '\n';
    return kExitPhysics;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  RunConfig config;
  try {
    if (!parse_config(args, config, out)) return kExitOk;
  } catch (const ConfigError& e) {
    err << "reqcsim: " << e.what() << "\n(see reqcsim --help)\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace reqc::cli
