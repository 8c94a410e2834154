// Command-line front end.  Every subcommand is a thin composition of library
// calls; all numeric logic lives in the headers.  Output is a single JSON
// document on stdout with sorted keys and %.11e floats, so identical inputs
// produce identical bytes.
//
// Exit status: 0 success (or: prescribed tensor solvable / verification
// passed), 2 validated-unsolvable (or verification failed), 1 input error.

#include <nilricci/nilricci.hpp>
#include <nilricci/json_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace nilricci;
namespace J = nilricci::jsonio;
namespace fs = std::filesystem;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double tolerance_from_env() {
  const char *s = std::getenv("TOLERANCE");
  if (!s || !*s) return 1e-8;
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != std::string(s).size() || !(v > 0)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception &) {
    throw InputError(std::string("TOLERANCE must be a positive number, got: ") + s);
  }
}

AlgebraId need_id(const std::string &s) {
  auto id = parse_algebra_id(s);
  if (!id) throw InputError("unknown algebra id: " + s);
  return *id;
}

Mat5 need_symmetric_gram(const std::string &path) {
  Mat5 g = J::load_gram_file(path);
  if (!is_symmetric(g))
    throw InputError("gram matrix in " + path + " is not symmetric");
  return g;
}

Mat5 need_tensor(AlgebraId id, const std::string &path) {
  J::TensorFile tf = J::load_tensor_file(path);
  if (tf.algebra && *tf.algebra != id)
    throw InputError("tensor file " + path + " declares algebra " +
                     slug(*tf.algebra) + " but the command names " + slug(id));
  if (!is_symmetric(tf.matrix))
    throw InputError("tensor in " + path + " is not symmetric");
  return tf.matrix;
}

// off-pattern entries are input errors, reported with their 1-based position
void reject_off_pattern(AlgebraId id, const Mat5 &T, const std::string &where) {
  const auto &pat = prescribed_pattern(id);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      if (!pat.count({i, j}) && std::abs(T(i, j)) > 1e-10)
        throw InputError(where + ": entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") = " + std::to_string(T(i, j)) +
                         " lies outside the sparsity pattern for " + slug(id));
}

J::Value conditions_value(const ConditionReport &rep) {
  J::Value v = J::Value::object();
  J::Value items = J::Value::array();
  for (const auto &c : rep.items) {
    J::Value item = J::Value::object();
    item["name"] = c.name;
    item["satisfied"] = c.satisfied;
    item["residual"] = c.residual;
    items.push_back(std::move(item));
  }
  v["items"] = std::move(items);
  v["derived_quantities"] = J::from_coeffs(rep.derived);
  v["off_pattern_max"] = rep.off_pattern;
  if (rep.branch) v["branch"] = rep.branch;
  v["all_satisfied"] = rep.all_satisfied();
  return v;
}

J::Value solution_value(const Solution &sol) {
  J::Value v = J::Value::object();
  v["coefficients"] = J::from_coeffs(sol.co);
  v["t"] = sol.t;
  v["residual"] = sol.residual;
  v["sufficiency_only"] = sol.sufficiency_only;
  if (sol.branch) v["branch"] = sol.branch;
  return v;
}

void emit(const J::Value &doc) { std::cout << doc.dump() << "\n"; }

// ---------------------------------------------------------------- commands

int cmd_algebras() {
  J::Value doc = J::Value::object();
  doc["command"] = "algebras";
  J::Value list = J::Value::array();
  for (const auto &ent : catalog()) {
    J::Value a = J::Value::object();
    a["id"] = ent.slug;
    a["name"] = ent.name;
    a["brackets"] = ent.brackets;
    J::Value lcs = J::Value::array();
    for (int d : lower_central_series(ent.sc)) lcs.push_back(d);
    a["lower_central_series"] = std::move(lcs);
    a["derivation_dimension"] =
        static_cast<long long>(derivation_space(ent.sc).dimension);
    list.push_back(std::move(a));
  }
  doc["algebras"] = std::move(list);
  emit(doc);
  return 0;
}

int cmd_derive(const std::string &ids) {
  const AlgebraId id = need_id(ids);
  const DerivationSpace sp = derivation_space(catalog_sc(id));
  J::Value doc = J::Value::object();
  doc["command"] = "derive";
  doc["algebra"] = slug(id);
  doc["dimension"] = static_cast<long long>(sp.dimension);
  doc["printed_parameter_count"] =
      static_cast<long long>(printed_derivation_free_count(id));
  doc["matches_printed_count"] =
      sp.dimension == printed_derivation_free_count(id);
  J::Value names = J::Value::array();
  for (const auto &n : derivation_free_names(id)) names.push_back(n);
  doc["free_parameter_names"] = std::move(names);
  J::Value basis = J::Value::array();
  for (const auto &D : sp.basis) basis.push_back(J::from_matrix(D));
  doc["basis"] = std::move(basis);
  emit(doc);
  return 0;
}

int cmd_reduce(const std::string &ids, const std::string &gram_path) {
  const AlgebraId id = need_id(ids);
  const Mat5 g = J::load_gram_file(gram_path);
  Reduction red;
  try {
    red = reduce(id, g);
  } catch (const std::invalid_argument &ex) {
    throw InputError(std::string("reduce: ") + ex.what());
  }
  J::Value doc = J::Value::object();
  doc["command"] = "reduce";
  doc["algebra"] = slug(id);
  doc["gram"] = J::from_matrix(g);
  J::Value rep = J::Value::object();
  rep["matrix"] = J::from_matrix(red.rep.matrix);
  rep["entries"] = J::from_coeffs(red.rep.entries);
  if (red.rep.branch) rep["branch"] = red.rep.branch;
  doc["representative"] = std::move(rep);
  doc["phi"] = J::from_matrix(red.phi);
  doc["q"] = J::from_matrix(red.q);
  J::Value diag = J::Value::object();
  diag["automorphism_defect"] = red.automorphism_defect;
  diag["q_orthogonality"] = red.q_orthogonality;
  diag["identity_residual"] = red.identity_residual;
  diag["pattern_residual"] = red.pattern_residual;
  doc["diagnostics"] = std::move(diag);
  emit(doc);
  return 0;
}

int cmd_frame(const std::string &ids, const std::string &gram_path) {
  const AlgebraId id = need_id(ids);
  const Mat5 S = need_symmetric_gram(gram_path);
  MilnorFrame mf;
  try {
    mf = milnor_frame(id, S);
  } catch (const std::invalid_argument &ex) {
    throw InputError(std::string("frame: ") + ex.what());
  }
  const Mat5 G = mf.V.transpose() * (mf.eta * S) * mf.V;
  J::Value doc = J::Value::object();
  doc["command"] = "frame";
  doc["algebra"] = slug(id);
  doc["gram"] = J::from_matrix(S);
  doc["eta"] = mf.eta;
  doc["frame"] = J::from_matrix(mf.V);
  doc["coefficients"] = J::from_coeffs(mf.co);
  doc["orthonormality_residual"] = (G - Mat5::Identity()).cwiseAbs().maxCoeff();
  doc["strict_pattern_residual"] = strict_pattern_residual(id, mf.co);
  emit(doc);
  return 0;
}

int cmd_ricci(const std::string &ids, const std::string &coeff_spec,
              const std::string &gram_path) {
  const AlgebraId id = need_id(ids);
  J::Value doc = J::Value::object();
  doc["command"] = "ricci";
  doc["algebra"] = slug(id);
  Coeffs co;
  if (!gram_path.empty()) {
    const Mat5 S = need_symmetric_gram(gram_path);
    MilnorFrame mf;
    try {
      mf = milnor_frame(id, S);
    } catch (const std::invalid_argument &ex) {
      throw InputError(std::string("ricci: ") + ex.what());
    }
    co = mf.co;
    doc["gram"] = J::from_matrix(S);
    doc["eta"] = mf.eta;
    // Ricci of eta*S as a (0,2)-tensor in the defining basis
    doc["ricci_basis"] = J::from_matrix(
        ricci_reference_basis(mf.V, catalog_sc(id)));
  } else {
    co = J::parse_coeff_list(coeff_spec);
    for (const auto &[k, v] : co) {
      bool known = k == "case" && id == AlgebraId::A41plusA1;
      for (const auto &s : pattern_slots(id)) known = known || k == s.name;
      if (!known)
        throw InputError("unknown coefficient for " + slug(id) + ": " + k);
    }
  }
  const StructureConstants a = pattern_tensor(id, co);
  const Mat5 R = ricci_orthonormal(a);
  doc["coefficients"] = J::from_coeffs(co);
  doc["ricci_oracle"] = J::from_matrix(R);
  doc["scalar_curvature"] = scalar_curvature(a);
  const bool applicable = closed_form_applicable(id, co);
  doc["closed_form_applicable"] = applicable;
  const Mat5 C = closed_form_ricci(id, co);
  doc["ricci_closed_form"] = J::from_matrix(C);
  doc["max_discrepancy"] = (R - C).cwiseAbs().maxCoeff();
  emit(doc);
  return 0;
}

// solve one tensor; fills `out`, returns 0 (solvable) or 2
int solve_one(AlgebraId id, const Mat5 &T, double t, double tol, J::Value &out) {
  out["tensor"] = J::from_matrix(T);
  out["t"] = t;
  const Mat5 Te = t * t * T;
  out["conditions"] = conditions_value(check_conditions(id, Te));
  const auto sol = solve_prescribed(id, T, t, tol);
  out["solvable"] = static_cast<bool>(sol);
  if (sol) {
    out["solution"] = solution_value(*sol);
    return 0;
  }
  return 2;
}

int cmd_solve(const std::string &ids, const std::string &tensor_path,
              const std::string &batch_dir, double t) {
  const AlgebraId id = need_id(ids);
  const double tol = tolerance_from_env();
  J::Value doc = J::Value::object();
  doc["command"] = "solve";
  doc["algebra"] = slug(id);
  if (batch_dir.empty()) {
    const Mat5 T = need_tensor(id, tensor_path);
    reject_off_pattern(id, T, tensor_path);
    const int rc = solve_one(id, T, t, tol, doc);
    emit(doc);
    return rc;
  }
  if (!fs::is_directory(batch_dir))
    throw InputError("--batch: not a directory: " + batch_dir);
  std::vector<std::string> files;
  for (const auto &e : fs::directory_iterator(batch_dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  J::Value batch = J::Value::array();
  long long solvable = 0, unsolvable = 0;
  for (const auto &f : files) {
    const Mat5 T = need_tensor(id, f);
    reject_off_pattern(id, T, f);
    J::Value one = J::Value::object();
    one["file"] = fs::path(f).filename().string();
    if (solve_one(id, T, t, tol, one) == 0)
      ++solvable;
    else
      ++unsolvable;
    batch.push_back(std::move(one));
  }
  doc["batch"] = std::move(batch);
  J::Value sum = J::Value::object();
  sum["total"] = solvable + unsolvable;
  sum["solvable"] = solvable;
  sum["unsolvable"] = unsolvable;
  doc["summary"] = std::move(sum);
  emit(doc);
  return unsolvable == 0 ? 0 : 2;
}

int cmd_verify(const std::string &ids, const std::string &tensor_path,
               const std::string &coeff_spec, double t) {
  const AlgebraId id = need_id(ids);
  const double tol = tolerance_from_env();
  const Mat5 T = need_tensor(id, tensor_path);
  const Coeffs co = J::parse_coeff_list(coeff_spec);
  const Mat5 Te = t * t * T;
  const double r = prescribed_residual(id, co, Te);
  const double scale = std::max(1.0, Te.cwiseAbs().maxCoeff());
  J::Value doc = J::Value::object();
  doc["command"] = "verify";
  doc["algebra"] = slug(id);
  doc["tensor"] = J::from_matrix(T);
  doc["coefficients"] = J::from_coeffs(co);
  doc["t"] = t;
  doc["residual"] = r;
  doc["tolerance"] = tol;
  const bool ok = r <= tol * scale;
  doc["verified"] = ok;
  emit(doc);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "left-invariant Ricci curvature on the nine 5-dimensional nilpotent "
      "Lie algebras"};
  app.require_subcommand(1);

  std::string ids, gram_path, tensor_path, coeff_spec, batch_dir;
  double t = 1.0;

  app.add_subcommand("algebras", "list the algebra catalog");

  auto *derive = app.add_subcommand("derive", "derivation algebra basis and dimension");
  derive->add_option("id", ids, "algebra id")->required();

  auto *reduce_c = app.add_subcommand("reduce", "reduce an inner product to its moduli representative");
  reduce_c->add_option("id", ids, "algebra id")->required();
  reduce_c->add_option("--gram", gram_path, "JSON file with a 5x5 gram matrix")->required();

  auto *frame = app.add_subcommand("frame", "Milnor frame of an inner product");
  frame->add_option("id", ids, "algebra id")->required();
  frame->add_option("--gram", gram_path, "JSON file with a 5x5 SPD gram matrix")->required();

  auto *ricci = app.add_subcommand("ricci", "Ricci curvature (oracle and closed form)");
  ricci->add_option("id", ids, "algebra id")->required();
  auto *ropt = ricci->add_option("--coeffs", coeff_spec, "frame coefficients, e.g. alpha=1,beta=2");
  auto *gopt = ricci->add_option("--gram", gram_path, "JSON file with a 5x5 SPD gram matrix");
  ropt->excludes(gopt);

  auto *solve = app.add_subcommand("solve", "solve the prescribed-Ricci equation Ric(g) = t^2 T");
  solve->add_option("id", ids, "algebra id")->required();
  auto *topt = solve->add_option("--tensor", tensor_path, "JSON file with the target tensor T");
  auto *bopt = solve->add_option("--batch", batch_dir, "directory of tensor JSON files (sorted by filename)");
  solve->add_option("--t", t, "scale parameter t (default 1)");
  topt->excludes(bopt);

  auto *verify = app.add_subcommand("verify", "check Ric(coefficients) = t^2 T");
  verify->add_option("id", ids, "algebra id")->required();
  verify->add_option("--tensor", tensor_path, "JSON file with the target tensor T")->required();
  verify->add_option("--coeffs", coeff_spec, "frame coefficients, e.g. alpha=1,beta=2")->required();
  verify->add_option("--t", t, "scale parameter t (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);  // prints usage/help
    return rc == 0 ? 0 : 1;     // --help exits 0; any usage error is an input error
  }

  try {
    if (app.got_subcommand("algebras")) return cmd_algebras();
    if (app.got_subcommand("derive")) return cmd_derive(ids);
    if (app.got_subcommand("reduce")) return cmd_reduce(ids, gram_path);
    if (app.got_subcommand("frame")) return cmd_frame(ids, gram_path);
    if (app.got_subcommand("ricci")) {
      if (coeff_spec.empty() == gram_path.empty())
        throw InputError("ricci: exactly one of --coeffs or --gram is required");
      return cmd_ricci(ids, coeff_spec, gram_path);
    }
    if (app.got_subcommand("solve")) {
      if (tensor_path.empty() == batch_dir.empty())
        throw InputError("solve: exactly one of --tensor or --batch is required");
      return cmd_solve(ids, tensor_path, batch_dir, t);
    }
    if (app.got_subcommand("verify")) return cmd_verify(ids, tensor_path, coeff_spec, t);
  } catch (const InputError &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
