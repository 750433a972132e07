// Command-line front end for the osp12 library. Uses the C API only.
#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "osp12.h"

namespace {

osp12_format parse_format(const std::string& f) {
  if (f == "csv") return OSP12_FORMAT_CSV;
  if (f == "tex") return OSP12_FORMAT_TEX;
  return OSP12_FORMAT_JSON;
}

int emit(osp12_doc* doc, const std::string& format) {
  if (!doc) {
    std::fprintf(stderr, "internal error: no document produced\n");
    return 4;
  }
  char* text = osp12_doc_render(doc, parse_format(format));
  if (text) {
    std::fputs(text, stdout);
    osp12_string_free(text);
  }
  const int code = osp12_doc_exit_code(doc);
  osp12_doc_free(doc);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible-level affine osp(1|2): weights, Zhu bimodules, fusion "
               "rules, and exact verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", osp12_version());

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "tex"}))
      ->capture_default_str();

  int p = 0, q = 0;
  int m1 = 0, s1 = 0, m2 = 0, s2 = 0;

  auto* weights = app.add_subcommand("weights", "Enumerate admissible weights of (p, q)");
  weights->add_option("p", p, "numerator parameter")->required();
  weights->add_option("q", q, "denominator parameter")->required();

  auto* fuse = app.add_subcommand("fuse", "Fuse two admissible weights, closed form vs oracle");
  fuse->add_option("p", p)->required();
  fuse->add_option("q", q)->required();
  fuse->add_option("m1", m1)->required();
  fuse->add_option("s1", s1)->required();
  fuse->add_option("m2", m2)->required();
  fuse->add_option("s2", s2)->required();

  int workers = 0;
  auto* table = app.add_subcommand("table", "Full fusion table with ring checks");
  table->add_option("p", p)->required();
  table->add_option("q", q)->required();
  table->add_option("--workers", workers, "Worker threads (or env OSP12_WORKERS)");

  std::string suite = "all";
  int max_pq = 0, depth = 0, gamma_max = 0;
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--suite", suite, "pq|factorization|projection|singular|oracle|all")
      ->capture_default_str();
  verify->add_option("--max-pq", max_pq, "Sweep bound on p*q (0 = suite default)");
  verify->add_option("--depth", depth, "Verma depth bound (default 6)");
  verify->add_option("--gamma-max", gamma_max, "Max integer exponent in P/Q sweeps (default 6)");
  verify->add_option("--workers", workers, "Worker threads (or env OSP12_WORKERS)");

  CLI11_PARSE(app, argc, argv);

  osp12_doc* doc = nullptr;
  if (weights->parsed()) {
    osp12_weights(p, q, &doc);
  } else if (fuse->parsed()) {
    osp12_fuse(p, q, m1, s1, m2, s2, &doc);
  } else if (table->parsed()) {
    osp12_table(p, q, workers, &doc);
  } else if (verify->parsed()) {
    osp12_verify_opts opts{suite.c_str(), max_pq, depth, gamma_max, workers};
    osp12_verify(&opts, &doc);
  }
  return emit(doc, format);
}
