// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liepool/ansatz.hpp"
#include "liepool/dis.hpp"
#include "liepool/fermion.hpp"
#include "liepool/lie.hpp"
#include "liepool/model.hpp"
#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace liepool::cli {
namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  int exit_code;
  CliError(int code, const std::string& msg)
      : std::runtime_error(msg), exit_code(code) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitParse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_report(const std::string& path, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kExitParse, "cannot write " + path);
  out << text;
}

// --- generator loading -------------------------------------------------------

struct GeneratorSet {
  int n_qubits = 0;
  std::vector<PauliSum> ops;
  std::optional<SpinOrbitalLayout> layout;  // set for fermionic inputs
};

GeneratorSet load_generators(const std::string& path, int expect_qubits) {
  const std::string text = read_file(path);
  GeneratorSet out;
  try {
    if (looks_like_fermion_file(text)) {
      const FermionFile file = parse_fermion_file(text);
      if (expect_qubits > 0 && expect_qubits != file.n_modes) {
        throw CliError(kExitParse,
                       path + ": --qubits disagrees with the modes header");
      }
      out.n_qubits = file.n_modes;
      out.layout = file.layout;
      for (const FermionOperator& op : file.operators) {
        out.ops.push_back(jordan_wigner(op));
      }
    } else {
      out.ops = parse_pauli_sum_list(text, expect_qubits);
      if (out.ops.empty()) {
        throw CliError(kExitParse, path + ": no operators found");
      }
      out.n_qubits = out.ops.front().n_qubits();
    }
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  }
  return out;
}

SpinOrbitalLayout layout_for(const GeneratorSet& gens) {
  if (gens.layout) return *gens.layout;
  if (gens.n_qubits % 2 != 0) {
    throw CliError(kExitParse,
                   "spin symmetries need an even qubit count or a fermionic "
                   "input with a layout header");
  }
  return SpinOrbitalLayout{gens.n_qubits / 2};
}

std::vector<SymmetryKind> parse_symmetries(const std::string& csv) {
  std::vector<SymmetryKind> kinds;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "ne") {
      kinds.push_back(SymmetryKind::Ne);
    } else if (tok == "sz") {
      kinds.push_back(SymmetryKind::Sz);
    } else if (tok == "s2") {
      kinds.push_back(SymmetryKind::S2);
    } else {
      throw CliError(kExitParse, "unknown symmetry '" + tok +
                                     "' (choose from ne, sz, s2)");
    }
  }
  return kinds;
}

OptimizeOptions seed_options(const std::string& schedule) {
  OptimizeOptions opts;
  if (schedule.empty()) return opts;
  std::stringstream ss(schedule);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      opts.seeds.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw CliError(kExitParse, "bad seed '" + tok + "' in --seed-schedule");
    }
  }
  return opts;
}

// --- json views --------------------------------------------------------------

json subalgebra_json(const Subalgebra& s) {
  json out;
  out["dimension"] = s.dim();
  out["n_qubits"] = s.n_qubits;
  json basis = json::array();
  for (const PauliSum& b : s.basis) basis.push_back(to_text(b));
  out["basis"] = std::move(basis);
  out["provenance"] = s.provenance;
  json structure = json::array();
  for (const StructureTriple& t : s.structure) {
    structure.push_back(json::array({t.i, t.j, t.k, t.value}));
  }
  out["structure_constants"] = std::move(structure);
  return out;
}

StateVector load_state(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  }
  try {
    if (j.contains("bitstring")) {
      return StateVector::from_bitstring(j.at("bitstring").get<std::string>());
    }
    const int n = j.at("qubits").get<int>();
    StateVector psi(n);
    const auto& amps = j.at("amplitudes");
    if (amps.size() != psi.dim()) {
      throw CliError(kExitParse, path + ": amplitude count != 2^qubits");
    }
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
      psi[i] = Complex{amps.at(i).at(0).get<double>(),
                       amps.at(i).at(1).get<double>()};
    }
    if (std::abs(psi.norm() - 1.0) > 1e-9) {
      throw CliError(kExitParse, path + ": state is not normalized");
    }
    return psi;
  } catch (const json::exception& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  }
}

// --- closure -----------------------------------------------------------------

struct ClosureConfig {
  std::string input, output;
  int qubits = 0;
  std::size_t max_dim = 0;
};

int cmd_closure(const ClosureConfig& cfg) {
  const GeneratorSet gens = load_generators(cfg.input, cfg.qubits);
  Subalgebra s;
  try {
    s = close(gens.ops, cfg.max_dim);
  } catch (const dimension_cap_error& e) {
    throw CliError(kExitCap, e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }
  const Subalgebra c = center(s);

  json report = subalgebra_json(s);
  report["command"] = "closure";
  report["generators"] = gens.ops.size();
  json center_view;
  center_view["dimension"] = c.dim();
  json center_basis = json::array();
  for (const PauliSum& b : c.basis) center_basis.push_back(to_text(b));
  center_view["basis"] = std::move(center_basis);
  report["center"] = std::move(center_view);
  if (gens.layout) report["n_spatial"] = gens.layout->n_spatial;
  write_report(cfg.output, report);
  return kExitOk;
}

// --- symmetrize --------------------------------------------------------------

struct SymmetrizeConfig {
  std::string input, output, symmetries;
  int qubits = 0;
  std::size_t max_dim = 0;
};

/// Closure reports are accepted in place of a generator file; their basis is
/// already commutator-closed, so it is adapted as-is.
std::optional<GeneratorSet> try_load_report(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos ||
      text[text.find_first_not_of(" \t\r\n")] != '{') {
    return std::nullopt;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    return std::nullopt;
  }
  GeneratorSet out;
  try {
    out.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& b : j.at("basis")) {
      out.ops.push_back(parse_pauli_sum(b.get<std::string>(), out.n_qubits));
    }
    if (j.contains("n_spatial")) {
      out.layout = SpinOrbitalLayout{j.at("n_spatial").get<int>()};
    }
  } catch (const json::exception& e) {
    throw CliError(kExitParse, std::string("closure report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, std::string("closure report: ") + e.what());
  }
  return out;
}

int cmd_symmetrize(const SymmetrizeConfig& cfg) {
  const std::string text = read_file(cfg.input);
  GeneratorSet gens;
  bool from_report = false;
  if (auto report_gens = try_load_report(text)) {
    gens = std::move(*report_gens);
    from_report = true;
  } else {
    gens = load_generators(cfg.input, cfg.qubits);
  }

  Subalgebra s;
  try {
    if (from_report) {
      s.n_qubits = gens.n_qubits;
      s.basis = gens.ops;
      for (std::size_t k = 0; k < s.basis.size(); ++k) {
        s.provenance.push_back("report[" + std::to_string(k) + "]");
      }
      s.structure = structure_constants(s);  // also validates closedness
    } else {
      s = close(gens.ops, cfg.max_dim);
    }
  } catch (const dimension_cap_error& e) {
    throw CliError(kExitCap, e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }

  const std::vector<SymmetryKind> kinds = parse_symmetries(cfg.symmetries);
  Subalgebra adapted;
  if (kinds.empty()) {
    adapted = s;
  } else {
    const std::vector<PauliSum> syms =
        adaptation_operators(kinds, layout_for(gens));
    try {
      adapted = symmetry_adapt(s, syms);
    } catch (const std::invalid_argument& e) {
      throw CliError(kExitParse, e.what());
    }
  }

  json report = subalgebra_json(adapted);
  report["command"] = "symmetrize";
  report["empty"] = adapted.dim() == 0;
  report["input_dimension"] = s.dim();
  report["symmetries"] = cfg.symmetries;
  write_report(cfg.output, report);
  return kExitOk;
}

// --- dis ---------------------------------------------------------------------

struct DisConfig {
  std::string input, output, ref_bits;
};

int cmd_dis(const DisConfig& cfg) {
  const GeneratorSet gens = load_generators(cfg.input, 0);
  if (gens.ops.size() != 1) {
    throw CliError(kExitParse, cfg.input + ": dis expects a single operator");
  }
  const PauliSum& h = gens.ops.front();
  StateVector ref(1);
  try {
    ref = StateVector::from_bitstring(cfg.ref_bits);
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }
  if (h.n_qubits() > kMaxDisQubits) {
    throw CliError(kExitCap, "dis supports at most " +
                                 std::to_string(kMaxDisQubits) + " qubits");
  }

  std::vector<GradientClass> classes;
  try {
    classes = dis_classes(h, ref);
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }

  // Partition sanity: no product may appear in two classes.
  std::set<PauliKey> seen;
  for (const GradientClass& c : classes) {
    for (const PauliTerm& m : c.members) {
      if (!seen.insert(m.key()).second) {
        throw CliError(kExitParse, "internal: DIS classes overlap");
      }
    }
  }

  json report;
  report["command"] = "dis";
  report["n_qubits"] = h.n_qubits();
  report["reference"] = cfg.ref_bits;
  json table = json::array();
  for (const GradientClass& c : classes) {
    json row;
    row["magnitude"] = c.magnitude;
    row["representative"] = c.representative.pauli_string();
    row["size"] = c.members.size();
    json members = json::array();
    for (const PauliTerm& m : c.members) members.push_back(m.pauli_string());
    row["members"] = std::move(members);
    table.push_back(std::move(row));
  }
  report["classes"] = std::move(table);
  write_report(cfg.output, report);
  return kExitOk;
}

// --- orderscan ---------------------------------------------------------------

struct OrderscanConfig {
  std::string input, output, objective, ref_bits, seeds;
};

/// Relative generator_file references resolve against the ansatz file's own
/// directory, so an ansatz and its generators travel together.
std::string resolve_near(const std::string& base_file,
                         const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_file).parent_path() / p).string();
}

std::vector<AnsatzFactor> load_factors(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  }
  std::vector<AnsatzFactor> factors;
  try {
    const int n = j.at("qubits").get<int>();
    for (const auto& f : j.at("factors")) {
      AnsatzFactor factor;
      factor.amplitude = f.value("amplitude", 0.0);
      if (f.contains("generator")) {
        factor.generator =
            parse_pauli_sum(f.at("generator").get<std::string>(), n);
      } else {
        const GeneratorSet gens = load_generators(
            resolve_near(path, f.at("generator_file").get<std::string>()), n);
        const int index = f.value("index", 0);
        if (index < 0 ||
            static_cast<std::size_t>(index) >= gens.ops.size()) {
          throw CliError(kExitParse, path + ": generator_file index out of "
                                            "range");
        }
        factor.generator = gens.ops[static_cast<std::size_t>(index)];
      }
      factors.push_back(std::move(factor));
    }
  } catch (const json::exception& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, path + ": " + e.what());
  }
  if (factors.empty()) {
    throw CliError(kExitParse, path + ": no factors");
  }
  return factors;
}

Objective load_objective(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) {
    throw CliError(kExitParse,
                   "--objective must be fidelity:<statefile> or "
                   "energy:<hamfile>");
  }
  const std::string kind = arg.substr(0, colon);
  const std::string path = arg.substr(colon + 1);
  if (kind == "fidelity") {
    return Objective::max_fidelity(load_state(path));
  }
  if (kind == "energy") {
    try {
      return Objective::min_energy(parse_pauli_sum(read_file(path)));
    } catch (const std::invalid_argument& e) {
      throw CliError(kExitParse, path + ": " + e.what());
    }
  }
  throw CliError(kExitParse, "unknown objective kind '" + kind + "'");
}

int cmd_orderscan(const OrderscanConfig& cfg) {
  const std::vector<AnsatzFactor> factors = load_factors(cfg.input);
  if (factors.size() > kMaxOrderScanFactors) {
    throw CliError(kExitCap, "orderscan supports at most " +
                                 std::to_string(kMaxOrderScanFactors) +
                                 " factors");
  }
  const Objective objective = load_objective(cfg.objective);
  StateVector ref(1);
  try {
    ref = StateVector::from_bitstring(cfg.ref_bits);
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }

  OrderScanResult scan;
  try {
    scan = orderscan(factors, ref, objective, seed_options(cfg.seeds));
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }

  json report;
  report["command"] = "orderscan";
  report["factors"] = factors.size();
  report["objective"] =
      objective.kind() == Objective::Kind::MaxFidelity ? "fidelity" : "energy";
  report["best_objective"] = scan.best_objective;
  report["worst_objective"] = scan.worst_objective;
  report["spread"] = scan.spread;
  report["order_invariant"] = scan.order_invariant;
  report["verdict"] =
      scan.order_invariant ? "order-invariant" : "order-dependent";
  json perms = json::array();
  for (const PermutationResult& p : scan.permutations) {
    json row;
    row["order"] = p.order;
    row["objective"] = p.result.objective;
    row["amplitudes"] = p.result.amplitudes;
    row["seed"] = p.result.best_seed;
    perms.push_back(std::move(row));
  }
  report["permutations"] = std::move(perms);
  write_report(cfg.output, report);
  return kExitOk;
}

// --- model -------------------------------------------------------------------

struct ModelConfig {
  std::string output, seeds;
  bool no_adapt = false;
  bool force_211 = false;
};

double annihilation_residual(const PauliSum& op, std::uint64_t index) {
  return apply_pauli_sum(op, StateVector::basis_state(4, index)).norm();
}

int cmd_model(const ModelConfig& cfg) {
  if (cfg.no_adapt && cfg.force_211) {
    throw CliError(kExitParse, "--no-adapt and --force-211 are exclusive");
  }
  const model::TwoElectron m = model::TwoElectron::build();
  const OptimizeOptions opts = seed_options(cfg.seeds);

  json stages;
  std::string failed;
  const auto record = [&](const std::string& name, bool ok, json detail) {
    detail["passed"] = ok;
    stages[name] = std::move(detail);
    if (!ok && failed.empty()) failed = name;
  };

  // Stage: commutator closure of the three fermionic generators.
  const Subalgebra closure = close(m.generators());
  record("closure", closure.dim() == 8, {{"dimension", closure.dim()}});

  // Stage: center of the closure kills every two-electron configuration.
  const Subalgebra c = center(closure);
  double center_residual = 0.0;
  for (const PauliSum& op : c.basis) {
    for (std::uint64_t index : {3u, 5u, 6u, 9u, 10u, 12u}) {
      center_residual =
          std::max(center_residual, annihilation_residual(op, index));
    }
  }
  record("center", c.dim() == 2 && center_residual <= 1e-10,
         {{"dimension", c.dim()}, {"max_residual", center_residual}});

  // Stage: symmetry adaptation down to the four singlet combinations.
  Subalgebra adapted;
  if (!cfg.no_adapt) {
    const std::vector<PauliSum> syms = adaptation_operators(
        {SymmetryKind::Ne, SymmetryKind::Sz, SymmetryKind::S2}, m.layout);
    adapted = symmetry_adapt(closure, syms);
    double span_residual = 0.0;
    for (const PauliSum* op : {&m.a1, &m.a2, &m.a3, &m.a4}) {
      span_residual = std::max(
          span_residual, rank_extend(adapted.basis, *op).residual.coord_norm());
    }
    record("adaptation", adapted.dim() == 4 && span_residual <= 1e-9,
           {{"dimension", adapted.dim()}, {"span_residual", span_residual}});

    // Stage: the adapted algebra's center element kills the sector.
    const Subalgebra ac = center(adapted);
    double ac_residual =
        ac.dim() == 1 ? rank_extend(ac.basis, m.a_center).residual.coord_norm()
                      : 1.0;
    double sector_residual = 0.0;
    for (std::uint64_t index : m.sector()) {
      sector_residual =
          std::max(sector_residual, annihilation_residual(m.a_center, index));
    }
    record("adapted_center",
           ac.dim() == 1 && ac_residual <= 1e-9 && sector_residual <= 1e-10,
           {{"dimension", ac.dim()},
            {"span_residual", ac_residual},
            {"sector_residual", sector_residual}});

    // Stage: the remaining three-element block is su(2).
    const std::vector<PauliSum> e = m.adapted_su2();
    const bool su2 = approx_equal(commutator(e[0], e[1]), e[2], 1e-12) &&
                     approx_equal(commutator(e[1], e[2]), e[0], 1e-12) &&
                     approx_equal(commutator(e[2], e[0]), e[1], 1e-12);
    record("su2", su2, {{"basis", json::array({"A2", "A3/2", "A4/2"})}});
  }

  // Stage: order scan of the final ansatz against the singlet target.
  const Objective objective = Objective::max_fidelity(m.target());
  json scan_detail;
  bool scan_ok = false;
  if (cfg.force_211) {
    // The fermionic 2-1-1 ordering is the known capped case: passing means
    // observing a best fidelity bounded away from 1.
    std::vector<AnsatzFactor> factors;
    for (const PauliSum& g : m.generators()) factors.push_back({g, 0.0});
    const OptimizeResult r = optimize(factors, m.ref(), objective, opts);
    scan_ok = r.objective < 1.0 - 1e-3;
    scan_detail["fidelity"] = r.objective;
    scan_detail["expected_failure"] = true;
    scan_detail["note"] = "capped ordering: best fidelity stays below 1";
  } else if (cfg.no_adapt) {
    // Without adaptation the six elements of the two su(2) blocks are used;
    // the full 720-permutation scan is replaced by a fixed ordering sample.
    std::vector<AnsatzFactor> factors;
    for (const auto& block : {m.algebra1(), m.algebra2()}) {
      for (const PauliSum& op : block) factors.push_back({op, 0.0});
    }
    const std::vector<std::vector<int>> orderings = {
        {0, 1, 2, 3, 4, 5}, {5, 4, 3, 2, 1, 0}, {1, 2, 3, 4, 5, 0},
        {3, 4, 5, 0, 1, 2}, {0, 2, 4, 1, 3, 5}, {5, 3, 1, 4, 2, 0}};
    scan_ok = true;
    json rows = json::array();
    for (const std::vector<int>& order : orderings) {
      std::vector<AnsatzFactor> arranged;
      for (int idx : order) arranged.push_back(factors[idx]);
      const OptimizeResult r = optimize(arranged, m.ref(), objective, opts);
      scan_ok = scan_ok && r.objective >= 1.0 - 1e-8;
      rows.push_back(json{{"order", order}, {"objective", r.objective}});
    }
    scan_detail["orderings"] = std::move(rows);
  } else {
    std::vector<AnsatzFactor> factors;
    for (const PauliSum* op : {&m.a2, &m.a3, &m.a4}) {
      factors.push_back({*op, 0.0});
    }
    const OrderScanResult scan = orderscan(factors, m.ref(), objective, opts);
    scan_ok = scan.order_invariant && scan.worst_objective >= 1.0 - 1e-8;
    scan_detail["spread"] = scan.spread;
    scan_detail["order_invariant"] = scan.order_invariant;
    json rows = json::array();
    for (const PermutationResult& p : scan.permutations) {
      rows.push_back(
          json{{"order", p.order}, {"objective", p.result.objective}});
    }
    scan_detail["orderings"] = std::move(rows);
  }
  record("orderscan", scan_ok, std::move(scan_detail));

  json report;
  report["command"] = "model";
  report["stages"] = std::move(stages);
  report["passed"] = failed.empty();
  report["failed_stage"] = failed;
  write_report(cfg.output, report);
  return failed.empty() ? kExitOk : kExitStage;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Lie subalgebra pools for exponent-product ansatze",
               "liepool"};
  app.require_subcommand(1);

  ClosureConfig closure_cfg;
  CLI::App* closure_cmd =
      app.add_subcommand("closure", "Commutator closure of a generator file");
  closure_cmd->add_option("--input", closure_cfg.input)->required();
  closure_cmd->add_option("--output", closure_cfg.output);
  closure_cmd->add_option("--qubits", closure_cfg.qubits);
  closure_cmd->add_option("--max-dim", closure_cfg.max_dim)
      ->check(CLI::PositiveNumber);

  SymmetrizeConfig sym_cfg;
  CLI::App* sym_cmd = app.add_subcommand(
      "symmetrize", "Symmetry-adapt a closure report or generator file");
  sym_cmd->add_option("--input", sym_cfg.input)->required();
  sym_cmd->add_option("--output", sym_cfg.output);
  sym_cmd->add_option("--symmetries", sym_cfg.symmetries)
      ->description("comma list from ne, sz, s2");
  sym_cmd->add_option("--qubits", sym_cfg.qubits);
  sym_cmd->add_option("--max-dim", sym_cfg.max_dim)->check(CLI::PositiveNumber);

  DisConfig dis_cfg;
  CLI::App* dis_cmd = app.add_subcommand(
      "dis", "Gradient classes of a Hamiltonian at a basis reference");
  dis_cmd->add_option("--input", dis_cfg.input)->required();
  dis_cmd->add_option("--output", dis_cfg.output);
  dis_cmd->add_option("--ref-bitstring", dis_cfg.ref_bits)->required();

  OrderscanConfig scan_cfg;
  CLI::App* scan_cmd = app.add_subcommand(
      "orderscan", "Optimize an ansatz over every factor permutation");
  scan_cmd->add_option("--input", scan_cfg.input)->required();
  scan_cmd->add_option("--output", scan_cfg.output);
  scan_cmd->add_option("--objective", scan_cfg.objective)->required();
  scan_cmd->add_option("--ref-bitstring", scan_cfg.ref_bits)->required();
  scan_cmd->add_option("--seed-schedule", scan_cfg.seeds);

  ModelConfig model_cfg;
  CLI::App* model_cmd = app.add_subcommand(
      "model", "Reproduce the built-in two-electron pipeline");
  model_cmd->add_option("--output", model_cfg.output);
  model_cmd->add_option("--seed-schedule", model_cfg.seeds);
  model_cmd->add_flag("--no-adapt", model_cfg.no_adapt);
  model_cmd->add_flag("--force-211", model_cfg.force_211);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "%s\n", e.what());
    return kExitParse;
  }

  try {
    if (closure_cmd->parsed()) return cmd_closure(closure_cfg);
    if (sym_cmd->parsed()) return cmd_symmetrize(sym_cfg);
    if (dis_cmd->parsed()) return cmd_dis(dis_cfg);
    if (scan_cmd->parsed()) return cmd_orderscan(scan_cfg);
    return cmd_model(model_cfg);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.exit_code;
  } catch (const dimension_cap_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCap;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
}

}  // namespace liepool::cli
