// Copyright 2026 The cpc-codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <locale>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cpc/circuit.h"
#include "cpc/code.h"
#include "cpc/decoding.h"
#include "cpc/dynamics.h"
#include "cpc/ising.h"
#include "cpc/logical.h"
#include "cpc/propagation.h"
#include "cpc/search.h"
#include "cpc/stabilizers.h"

namespace cpc::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  uint64_t seed = 1;
  size_t threads = 1;
  std::string out;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AnyCode load(const std::string &path) {
  AnyCode code;
  try {
    code = parse_code(read_file(path));
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  }
  auto violations = validate(code);
  if (!violations.empty()) {
    throw InputError(path + ": " + violations.front());
  }
  return code;
}

CpcCode require_split(const AnyCode &code, const std::string &command) {
  if (const auto *split = std::get_if<CpcCode>(&code)) {
    return *split;
  }
  throw InputError(command + " needs a split code");
}

// CLI data indices are 1-based.
size_t data_index(size_t one_based, size_t k, const std::string &what) {
  if (one_based < 1 || one_based > k) {
    throw InputError(what + " must be a data qubit in 1.." + std::to_string(k));
  }
  return one_based - 1;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(10);
  s << v;
  return s.str();
}

std::string join(const std::vector<std::string> &items, const std::string &sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); i++) {
    out += (i ? sep : "") + items[i];
  }
  return out;
}

std::vector<std::string> data_labels(const AnyCode &code) {
  auto labels = qubit_labels(code);
  labels.resize(data_count(code));
  return labels;
}

std::string classical_listing(const std::string &title, const ClassicalCode &code) {
  std::string out = title + "\n";
  for (const auto &check : code.checks) {
    std::vector<std::string> bits;
    for (size_t b : check.bits) {
      bits.push_back(code.bit_labels[b]);
    }
    out += "  check " + check.label + ": " + join(bits, " ") + "\n";
  }
  std::vector<std::string> harmless;
  for (size_t b : code.harmless) {
    harmless.push_back(code.bit_labels[b]);
  }
  out += "  harmless: " + (harmless.empty() ? std::string("none") : join(harmless, " ")) + "\n";
  return out;
}

std::string distance_text(std::optional<size_t> d, size_t w_max) {
  return d ? std::to_string(*d) : ">" + std::to_string(w_max);
}

// Parses "cnot:c,t" into 1-based indices.
std::pair<size_t, size_t> parse_require(const std::string &text) {
  size_t c = 0, t = 0;
  char comma = 0;
  std::istringstream in(text.rfind("cnot:", 0) == 0 ? text.substr(5) : std::string());
  if (!(in >> c >> comma >> t) || comma != ',' || !in.eof()) {
    throw InputError("--require expects cnot:c,t");
  }
  return {c, t};
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Coherent parity check code toolkit", "cpc"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker thread cap")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", g.out, "Output file (directory for search)");

  std::string file;
  auto add = [&](const std::string &name, const std::string &help, bool takes_file = true) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (takes_file) {
      sub->add_option("file", file, "Input file")->required();
    }
    return sub;
  };

  size_t w_max = 4;
  std::string cnot_pair;
  bool effective = false;
  CLI::App *verify = add("verify", "Check single-error correction and report the distance");
  verify->add_option("--max-weight", w_max, "Distance search bound")->capture_default_str();
  verify->add_option("--cnot", cnot_pair, "Also check CNOT compatibility, e.g. cnot:1,2");
  verify->add_flag("--effective", effective, "List the effective classical codes");

  bool symplectic = false;
  CLI::App *stabs = add("stabilizers", "Print stabilizer generators");
  stabs->add_flag("--symplectic", symplectic, "Print G_Z and G_X instead");

  CLI::App *logicals = add("logicals", "Print logical X and Z operators");

  CLI::App *distance = add("distance", "Exhaustive code distance");
  distance->add_option("--max-weight", w_max, "Search bound")->capture_default_str();

  CLI::App *etable = add("error-table", "Single-qubit error table as TSV");

  bool best_effort = false;
  CLI::App *dtable = add("decode-table", "Decode table as TSV");
  dtable->add_flag("--best-effort", best_effort, "Resolve collisions instead of failing");

  CLI::App *css2cpc = add("css-to-cpc", "Convert a CSS presentation to a split code");
  CLI::App *cpc2css = add("cpc-to-css", "Convert a split code to its CSS presentation");

  std::string syndrome_text;
  std::string species = "bit";
  double prior = 0.05;
  CLI::App *ising = add("ising", "Ising Hamiltonian and ground-state decode for one syndrome");
  ising->add_option("--syndrome", syndrome_text, "Check outcomes as 0/1 string")->required();
  ising->add_option("--species", species, "bit or phase (split codes)")
      ->check(CLI::IsMember({"bit", "phase"}))
      ->capture_default_str();
  ising->add_option("--p", prior, "Uniform error probability")->capture_default_str();

  ErrorModel model;
  SimConfig sim_config;
  std::string engine = "frame";
  CLI::App *simulate_cmd = add("simulate", "Monte Carlo fidelity time series as CSV");
  simulate_cmd->add_option("--eps-bit", model.eps_bit, "X error rate (1/s)")->capture_default_str();
  simulate_cmd->add_option("--eps-phase", model.eps_phase, "Z error rate (1/s)")->capture_default_str();
  simulate_cmd->add_option("--rate", sim_config.cycle_rate, "Cycles per second")->capture_default_str();
  simulate_cmd->add_option("--t-max", sim_config.t_max, "Duration (s)")->capture_default_str();
  simulate_cmd->add_option("--samples", sim_config.samples, "Time points")->capture_default_str();
  simulate_cmd->add_option("--trials", sim_config.trials, "Trajectories")->capture_default_str();
  simulate_cmd->add_option("--haar", sim_config.haar_states, "Haar states per trial")->capture_default_str();
  simulate_cmd->add_option("--engine", engine, "frame or statevector")
      ->check(CLI::IsMember({"frame", "statevector"}))
      ->capture_default_str();

  std::string column = "Frand";
  CLI::App *fit = add("fit", "Fit a half-life to a simulate CSV");
  fit->add_option("--column", column, "F0, Fplus or Frand")
      ->check(CLI::IsMember({"F0", "Fplus", "Frand"}))
      ->capture_default_str();

  SearchConfig search_config;
  std::string require;
  CLI::App *search_cmd = add("search", "Random search for codes", false);
  search_cmd->add_option("--data", search_config.k, "Data qubits")->required();
  search_cmd->add_option("--bit", search_config.n_b, "Bit checks")->required();
  search_cmd->add_option("--phase", search_config.n_p, "Phase checks")->required();
  search_cmd->add_option("--budget", search_config.budget, "Trials")->required();
  search_cmd->add_option("--cap", search_config.cap, "Maximum codes kept")->capture_default_str();
  search_cmd->add_flag("--mirror-bp", search_config.mirror_bp, "Use the same bit and phase matrix");
  search_cmd->add_option("--require", require, "Predicate cnot:c,t instead of single-error correction");

  size_t qubit = 0, control = 0, target = 0;
  CLI::App *logical_h = add("logical-h", "Encoder that also applies H on a data qubit");
  logical_h->add_option("--qubit", qubit, "Data qubit (1-based)")->required();
  CLI::App *logical_cnot = add("logical-cnot", "Encoder that also applies CNOT between data qubits");
  logical_cnot->add_option("--control", control, "Control data qubit (1-based)")->required();
  logical_cnot->add_option("--target", target, "Target data qubit (1-based)")->required();

  bool decode_side = false;
  CLI::App *emit = add("emit-circuit", "Print the encode circuit");
  emit->add_flag("--decode", decode_side, "Print the decode circuit instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto emit_text = [&](const std::string &text) {
    if (g.out.empty()) {
      out << text;
      return;
    }
    std::ofstream f(g.out, std::ios::binary);
    f << text;
    if (!f) {
      throw InputError("cannot write " + g.out);
    }
  };

  try {
    if (verify->parsed()) {
      AnyCode code = load(file);
      CorrectabilityReport report = is_single_error_correcting(code);
      std::string text = std::string("single-error correcting: ") + (report.ok ? "yes" : "no") +
                         ", distance: " + distance_text(code_distance(code, w_max), w_max) + "\n";
      text += report.certificate(code);
      bool ok = report.ok;
      if (!cnot_pair.empty()) {
        CpcCode split = require_split(code, "--cnot");
        auto [c, t] = parse_require(cnot_pair);
        CorrectabilityReport cr =
            cnot_compatible(split, data_index(c, split.k, "control"), data_index(t, split.k, "target"));
        text += std::string("cnot-compatible: ") + (cr.ok ? "yes" : "no") + "\n" + cr.certificate(code);
        ok = ok && cr.ok;
      }
      if (effective) {
        if (const auto *split = std::get_if<CpcCode>(&code)) {
          EffectiveCodes eff = effective_codes(*split);
          text += classical_listing("bit code", eff.bit) + classical_listing("phase code", eff.phase);
        } else {
          text += classical_listing("effective code", general_to_classical(std::get<GeneralCpcCode>(code)));
        }
      }
      emit_text(text);
      return ok ? kExitOk : kExitFailed;
    }
    if (stabs->parsed()) {
      AnyCode code = load(file);
      std::vector<PauliString> gens = stabilizers(code);
      std::string text;
      if (symplectic) {
        SymplecticForm form = symplectic_form(gens, qubit_count(code));
        text = "G_Z\n" + form.g_z.str() + "G_X\n" + form.g_x.str();
      } else {
        auto labels = qubit_labels(code);
        for (const auto &s : gens) {
          text += s.str_labels(labels) + "\n";
        }
      }
      emit_text(text);
      return kExitOk;
    }
    if (logicals->parsed()) {
      AnyCode code = load(file);
      LogicalOperators ops = logical_operators(code);
      auto labels = qubit_labels(code);
      std::string text;
      for (size_t i = 0; i < ops.x.size(); i++) {
        text += "X" + std::to_string(i + 1) + ": " + ops.x[i].str_labels(labels) + "\n";
      }
      for (size_t i = 0; i < ops.z.size(); i++) {
        text += "Z" + std::to_string(i + 1) + ": " + ops.z[i].str_labels(labels) + "\n";
      }
      emit_text(text);
      return kExitOk;
    }
    if (distance->parsed()) {
      AnyCode code = load(file);
      emit_text("distance: " + distance_text(code_distance(code, w_max), w_max) + "\n");
      return kExitOk;
    }
    if (etable->parsed()) {
      AnyCode code = load(file);
      ErrorTable table = error_table(code);
      auto labels = qubit_labels(code);
      std::string text = "error\tsyndrome\tclass\n";
      for (const auto &e : table.entries) {
        text += e.error.str_labels(labels) + "\t" + syndrome_bits(e.syndrome, table.check_count) + "\t" +
                (e.harmful ? "harmful" : "harmless") + "\n";
      }
      emit_text(text);
      return kExitOk;
    }
    if (dtable->parsed()) {
      AnyCode code = load(file);
      DecodeTable table;
      try {
        table = best_effort ? decode_table_best_effort(code) : decode_table(code);
      } catch (const UncorrectableCodeError &e) {
        err << e.what() << "\n" << e.report().certificate(code);
        return kExitFailed;
      }
      auto labels = qubit_labels(code);
      auto dlabels = data_labels(code);
      std::string text = "error\tsyndrome\tclass\tcorrection\n";
      for (const auto &[s, entry] : table.entries) {
        text += entry.explanation.str_labels(labels) + "\t" + syndrome_bits(s, table.check_count) + "\t" +
                decode_class_name(entry.cls) + "\t" + entry.correction.str_labels(dlabels) + "\n";
      }
      emit_text(text);
      return kExitOk;
    }
    if (css2cpc->parsed()) {
      CssCode css = parse_css(read_file(file));
      CssConversion conv = css_to_cpc(css.g_z, css.g_x);
      std::vector<std::string> cols;
      for (size_t c : conv.permutation) {
        cols.push_back(std::to_string(c + 1));
      }
      emit_text("# input columns in qubit order: " + join(cols, " ") + "\n" + serialize(conv.code));
      return kExitOk;
    }
    if (cpc2css->parsed()) {
      CpcCode code = require_split(load(file), "cpc-to-css");
      emit_text(serialize_css(cpc_to_css(code)));
      return kExitOk;
    }
    if (ising->parsed()) {
      AnyCode code = load(file);
      ClassicalCode classical;
      if (const auto *split = std::get_if<CpcCode>(&code)) {
        EffectiveCodes eff = effective_codes(*split);
        classical = species == "bit" ? eff.bit : eff.phase;
      } else {
        classical = general_to_classical(std::get<GeneralCpcCode>(code));
      }
      if (syndrome_text.size() != classical.checks.size() ||
          syndrome_text.find_first_not_of("01") != std::string::npos) {
        throw InputError("--syndrome needs " + std::to_string(classical.checks.size()) + " characters of 0/1");
      }
      if (!(prior > 0 && prior < 1)) {
        throw InputError("--p must lie strictly between 0 and 1");
      }
      std::vector<uint8_t> meas;
      for (char ch : syndrome_text) {
        meas.push_back(ch == '1');
      }
      Priors priors = Priors::uniform(classical, prior);
      IsingProblem problem = ising_problem(classical, priors, meas);
      MlDecodeResult decoded = ising_decode(classical, meas, priors);
      std::vector<std::string> bits, checks;
      for (size_t b : decoded.bit_errors) {
        bits.push_back(classical.bit_labels[b]);
      }
      for (size_t c : decoded.check_errors) {
        checks.push_back(classical.checks[c].label);
      }
      emit_text(problem.str() + "bit errors: " + (bits.empty() ? "none" : join(bits, " ")) + "\n" +
                "check errors: " + (checks.empty() ? "none" : join(checks, " ")) + "\n");
      return kExitOk;
    }
    if (simulate_cmd->parsed()) {
      AnyCode code = load(file);
      sim_config.seed = g.seed;
      sim_config.threads = g.threads;
      sim_config.engine = engine == "frame" ? SimEngine::kPauliFrame : SimEngine::kStatevector;
      SimResult result = simulate(code, model, sim_config);
      if (result.uncorrectable_cycles > 0) {
        err << "uncorrectable syndromes in " << result.uncorrectable_cycles << " of " << result.error_cycles
            << " cycles with errors\n";
      }
      emit_text(result.to_csv());
      return kExitOk;
    }
    if (fit->parsed()) {
      std::vector<SamplePoint> points = parse_sim_csv(read_file(file));
      std::vector<double> ts, vs;
      for (const auto &p : points) {
        ts.push_back(p.time);
        vs.push_back(column == "F0" ? p.f0 : column == "Fplus" ? p.fplus : p.frand);
      }
      HalfLifeFit f = fit_half_life(ts, vs);
      std::string text = "lambda_half: " + (f.degenerate ? std::string("inf") : fmt(f.lambda_half)) + " s\n" +
                         "F_inf: " + fmt(f.f_inf) + "\n";
      if (f.degenerate) {
        text += "degenerate: constant series\n";
      }
      emit_text(text);
      return kExitOk;
    }
    if (search_cmd->parsed()) {
      search_config.seed = g.seed;
      search_config.threads = g.threads;
      if (!require.empty()) {
        auto [c, t] = parse_require(require);
        search_config.predicate = SearchPredicate::kCnotCompatible;
        search_config.control = data_index(c, search_config.k, "control");
        search_config.target = data_index(t, search_config.k, "target");
      }
      SearchResult result = search(search_config);
      size_t written = 0;
      if (!g.out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(g.out, ec);
        for (const auto &found : result.codes) {
          auto path = std::filesystem::path(g.out) / ("code-" + std::to_string(found.trial) + ".cpc");
          std::ofstream f(path, std::ios::binary);
          f << "# search trial " << found.trial << ", seed " << g.seed << "\n" << serialize(found.code);
          if (!f) {
            throw InputError("cannot write " + path.string());
          }
          written++;
        }
      }
      out << "trials: " << result.trials << ", successes: " << result.successes
          << ", success rate: " << fmt(result.success_rate) << ", written: " << written << "\n";
      return result.successes > 0 ? kExitOk : kExitFailed;
    }
    if (logical_h->parsed()) {
      CpcCode code = require_split(load(file), "logical-h");
      emit_text(logical_hadamard_circuit(code, data_index(qubit, code.k, "--qubit")).str());
      return kExitOk;
    }
    if (logical_cnot->parsed()) {
      CpcCode code = require_split(load(file), "logical-cnot");
      size_t c = data_index(control, code.k, "--control");
      size_t t = data_index(target, code.k, "--target");
      if (c == t) {
        throw InputError("--control and --target must differ");
      }
      emit_text(logical_cnot_circuit(code, c, t).str());
      return kExitOk;
    }
    if (emit->parsed()) {
      AnyCode code = load(file);
      emit_text((decode_side ? decode_circuit(code) : encode_circuit(code)).str());
      return kExitOk;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace cpc::cli
