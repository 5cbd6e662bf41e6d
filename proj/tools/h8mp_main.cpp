// Command-line driver: verify structures and matched pairs, run the
// classification, derive matched pairs from the coquasitriangular forms, and
// build Yang-Baxter operators. All output files use the exact JSON encodings.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "h8mp/json_io.hpp"
#include "h8mp/render.hpp"

namespace fs = std::filesystem;
using namespace h8mp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitParseError = 2;

int jobs_from_env(int cli_jobs) {
  if (cli_jobs > 0) return cli_jobs;
  if (const char* env = std::getenv("H8MP_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // library default: hardware concurrency
}

std::string slug(const std::string& label) {
  std::string s;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!s.empty() && s.back() != '_')
      s += '_';
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s;
}

HopfData load_hopf(const std::string& path) {
  if (path.empty() || path == "ghz") return build_h8_ghz();
  if (path == "a12") return build_a12();
  return hopf_from_json(read_json_file(path));
}

int cmd_verify(const std::string& path, const std::string& hopf_path) {
  Json j = read_json_file(path);
  if (j.contains("mult")) {
    HopfData H = hopf_from_json(j);
    AxiomReport rep = verify_hopf_axioms(H);
    std::cout << rep.summary();
    return rep.all_ok() ? kExitOk : kExitVerificationFailed;
  }
  HopfData H = load_hopf(hopf_path);
  if (j.contains("left") && j.contains("right")) {
    MatchedPair mp = matched_pair_from_json(j);
    AxiomReport left = is_module_coalgebra_action(H, mp.left);
    AxiomReport right = is_module_coalgebra_action(H, mp.right);
    AxiomReport pair = verify_matched_pair_of_actions(H, mp);
    std::cout << "left action:\n" << left.summary();
    std::cout << "right action:\n" << right.summary();
    std::cout << "matched pair:\n" << pair.summary();
    return (left.all_ok() && right.all_ok() && pair.all_ok()) ? kExitOk
                                                              : kExitVerificationFailed;
  }
  if (j.contains("table")) {
    ActionTable a = action_from_json(j);
    AxiomReport rep = is_module_coalgebra_action(H, a);
    std::cout << rep.summary();
    return rep.all_ok() ? kExitOk : kExitVerificationFailed;
  }
  throw ParseError("unrecognized schema in " + path);
}

int cmd_classify(int situation, const std::string& out_dir, const std::string& render,
                 int jobs) {
  HopfData H = build_h8_ghz();
  Classification c = classify(H, situation, jobs);
  fs::path dir(out_dir);
  fs::create_directories(dir);
  write_json_file(dir / "classification.json", classification_to_json(c));
  for (const auto& mp : c.pairs) {
    write_json_file(dir / ("mp_" + slug(mp.provenance) + ".json"), matched_pair_to_json(mp));
    if (render == "table") {
      std::ofstream out(dir / ("table_" + slug(mp.provenance) + ".txt"));
      out << render_action_table(H, mp.left, "Left action, " + mp.provenance);
    }
  }
  for (const auto& oc : c.outcomes) {
    std::cout << "situation " << oc.situation.index << " (" << oc.situation.left_choice.label
              << ", " << oc.situation.right_choice.label << "): "
              << (oc.solutions.complete ? "complete" : "INCOMPLETE") << ", "
              << oc.pairs.size() << " matched pair(s)\n";
  }
  std::cout << "total matched pairs: " << c.pairs.size() << "\n";
  bool full_run = situation == 0;
  if (full_run && c.pairs.size() != 6) return kExitVerificationFailed;
  return kExitOk;
}

int cmd_derive_coquasi(const std::string& out_dir) {
  HopfData ghz = build_h8_ghz();
  HopfData a12 = build_a12();
  HopfIso iso = build_iso(ghz, a12);
  Classification c = classify(ghz);

  fs::path dir(out_dir);
  fs::create_directories(dir);
  std::vector<MatchedPair> derived;
  for (const CoquasiForm& f : all_coquasi_forms(a12)) {
    AxiomReport rep = verify_coquasitriangular(a12, f);
    std::cout << f.name() << ": " << (rep.all_ok() ? "coquasitriangular" : "FAILED") << "\n";
    if (!rep.all_ok()) {
      std::cout << rep.summary();
      return kExitVerificationFailed;
    }
    MatchedPair mp = derive_matched_pair_from_coquasi(a12, f);
    write_json_file(dir / ("mp_" + slug(f.name()) + ".json"), matched_pair_to_json(mp));
    derived.push_back(mp);
  }
  CorrespondenceReport rep = match_against_classification(a12, ghz, derived, iso, c.pairs);
  write_json_file(dir / "correspondence.json", correspondence_to_json(rep));
  std::cout << "image:";
  for (const auto& l : rep.image_labels) std::cout << " [" << l << "]";
  std::cout << "\ncomplement:";
  for (const auto& l : rep.complement_labels) std::cout << " [" << l << "]";
  std::cout << "\n";
  for (const auto& [form, label] : rep.assignments)
    if (label == "unmatched") return kExitVerificationFailed;
  return kExitOk;
}

int cmd_ybe(const std::string& path, const std::string& hopf_path, const std::string& out_dir) {
  HopfData H = load_hopf(hopf_path);
  MatchedPair mp = matched_pair_from_json(read_json_file(path));
  AxiomReport pair_rep = verify_matched_pair_of_actions(H, mp);
  if (!pair_rep.all_ok()) {
    std::cout << pair_rep.summary();
    return kExitVerificationFailed;
  }
  BraidOperator r = build_r(H, mp);
  BraidCheck braid = check_braid(H, r);
  bool involutive = check_involutive(r);
  auto inverse = braid_inverse(r);
  CriteriaReport criteria = check_involutivity_criteria(H, mp);
  if (!inverse) {
    std::cout << "operator is singular\n";
    return kExitVerificationFailed;
  }
  fs::path dir(out_dir);
  fs::create_directories(dir);
  write_json_file(dir / ("r_" + slug(mp.provenance) + ".json"),
                  braid_report_to_json(r, braid, involutive, criteria, *inverse));
  std::cout << "braid equation: " << (braid.holds ? "holds" : "fails " + braid.witness) << "\n";
  std::cout << "involutive: " << (involutive ? "true" : "false") << "\n";
  std::cout << "contraction identity: " << (criteria.contraction_identity ? "holds" : "fails")
            << "\n";
  std::cout << "antipode exchange: " << (criteria.antipode_exchange ? "holds" : "fails") << "\n";
  return braid.holds ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const std::string& out_dir) {
  HopfData ghz = build_h8_ghz();
  HopfData a12 = build_a12();
  HopfIso iso = build_iso(ghz, a12);
  fs::path dir(out_dir);
  fs::create_directories(dir);
  write_json_file(dir / "h8_ghz.json", hopf_to_json(ghz));
  write_json_file(dir / "a12.json", hopf_to_json(a12));
  write_json_file(dir / "iso.json", iso_to_json(iso));
  std::cout << "wrote h8_ghz.json, a12.json, iso.json\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with matched pairs of actions on the Kac-Paljutkin algebra"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: H8MP_JOBS or hardware)");

  std::string verify_path, verify_hopf;
  auto* verify = app.add_subcommand("verify", "verify a hopf.json, action.json or matched_pair.json");
  verify->add_option("path", verify_path)->required();
  verify->add_option("--hopf", verify_hopf, "ambient algebra: ghz (default), a12, or a file");

  int situation = 0;
  std::string cl_out = "out", cl_render = "json";
  auto* cl = app.add_subcommand("classify", "classify matched pairs of actions");
  cl->add_option("--situations", situation, "restrict to one situation index (1..16)");
  cl->add_option("--out", cl_out, "output directory");
  cl->add_option("--render", cl_render, "json|table")->check(CLI::IsMember({"json", "table"}));

  std::string dq_out = "out";
  auto* dq = app.add_subcommand("derive-coquasi",
                                "derive matched pairs from the coquasitriangular forms");
  dq->add_option("--out", dq_out, "output directory");

  std::string ybe_path, ybe_hopf, ybe_out = "out";
  auto* ybe = app.add_subcommand("ybe", "build and check the Yang-Baxter operator");
  ybe->add_option("path", ybe_path)->required();
  ybe->add_option("--hopf", ybe_hopf, "ambient algebra: ghz (default), a12, or a file");
  ybe->add_option("--out", ybe_out, "output directory");

  std::string ex_out = "out";
  auto* ex = app.add_subcommand("export", "write the shipped presentations and the iso");
  ex->add_option("--out", ex_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(verify_path, verify_hopf);
    if (*cl) return cmd_classify(situation, cl_out, cl_render, jobs_from_env(jobs));
    if (*dq) return cmd_derive_coquasi(dq_out);
    if (*ybe) return cmd_ybe(ybe_path, ybe_hopf, ybe_out);
    if (*ex) return cmd_export(ex_out);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}
