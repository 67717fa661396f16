// Copyright 2026 discopile contributors
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
//
// End-to-end checks of the command line binary. argv[1] is the binary under
// test; every invocation runs in a scratch directory under /tmp.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_dir;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
  std::string cmd = "\"" + g_cli + "\" " + args +
                    (keep_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cout << "FAIL: " << what << "\n";
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool exists(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return in.good();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

nlohmann::json parse_json_or_null(const std::string& text) {
  return nlohmann::json::parse(text, nullptr, false);
}

void test_parse() {
  RunResult ok = run("parse alice plays guitar");
  check(ok.status == 0, "parse: grammatical sentence exits 0");
  check(contains(ok.out, "type: n n.r@s@n.l n"), "parse: prints word types");
  check(contains(ok.out, "cups: (0,1) (3,4)"), "parse: prints cup pairs");
  check(contains(ok.out, "grammatical: yes"), "parse: reports grammatical");

  RunResult folded = run("parse \"Alice PLAYS guitar.\"");
  check(folded.status == 0, "parse: folds case and strips periods");

  RunResult bad = run("parse plays alice");
  check(bad.status == 2, "parse: ungrammatical sentence exits 2");
  check(contains(bad.out, "grammatical: no"), "parse: reports ungrammatical");
  check(contains(bad.out, "residue: n.r@s"), "parse: prints the residue");

  RunResult unknown = run("parse zorp plays guitar", true);
  check(unknown.status == 1, "parse: unknown token exits 1");
  check(contains(unknown.out, "error:"), "parse: unknown token says error");

  RunResult none = run("", true);
  check(none.status != 0, "no subcommand is an error");
}

void test_train() {
  std::string p0 = g_dir + "/p0.json";
  std::string l0 = g_dir + "/l0.csv";
  RunResult zero = run("train --iters 0 --out \"" + p0 + "\" --log \"" + l0 +
                       "\"");
  check(zero.status == 0, "train: zero iterations exits 0");
  check(exists(p0), "train: writes the params file");
  check(exists(l0), "train: writes the loss file");
  check(slurp(l0) == "iter,loss,accuracy\n",
        "train: zero-iteration log is only the header");
  nlohmann::json j = parse_json_or_null(zero.out);
  check(!j.is_discarded() && j.contains("accuracy") && j.contains("kappa") &&
            j.contains("f1"),
        "train: prints the metrics JSON");

  std::string pa = g_dir + "/pa.json";
  std::string la = g_dir + "/la.csv";
  std::string pb = g_dir + "/pb.json";
  std::string lb = g_dir + "/lb.csv";
  std::string args = "train --iters 5 --seed 11 ";
  RunResult a = run(args + "--out \"" + pa + "\" --log \"" + la + "\"");
  RunResult b = run(args + "--out \"" + pb + "\" --log \"" + lb + "\"");
  check(a.status == 0 && b.status == 0, "train: repeated runs exit 0");
  check(slurp(pa) == slurp(pb), "train: params are byte-identical per seed");
  check(slurp(la) == slurp(lb), "train: logs are byte-identical per seed");
  check(a.out == b.out, "train: printed metrics repeat per seed");

  RunResult missing = run("train --corpus /tmp/discopile_no_such.tsv", true);
  check(missing.status == 1, "train: missing corpus file exits 1");
}

void test_train_convergence() {
  std::string path = g_dir + "/converged.json";
  std::string log = g_dir + "/converged.csv";
  RunResult r = run("train --layers 2 --spsa-a 1.0 --seed 2 --iters 300 "
                    "--out \"" + path + "\" --log \"" + log + "\"");
  check(r.status == 0, "train: deep run exits 0");
  nlohmann::json j = parse_json_or_null(r.out);
  bool perfect = !j.is_discarded() &&
                 std::abs(j["accuracy"].get<double>() - 1.0) < 1e-12 &&
                 std::abs(j["kappa"].get<double>() - 1.0) < 1e-12 &&
                 std::abs(j["f1"].get<double>() - 1.0) < 1e-12;
  check(perfect, "train: the pinned seed separates the dataset exactly");
}

void test_mix() {
  std::string params = g_dir + "/p0.json";

  RunResult same = run("mix --sentence-a \"men are tasty\" --sentence-b "
                       "\"men are tasty\" --params \"" + params + "\"");
  check(same.status == 0, "mix: identical sentences exit 0");
  nlohmann::json js = parse_json_or_null(same.out);
  check(!js.is_discarded(), "mix: identical sentences print JSON");
  if (!js.is_discarded()) {
    check(js["entropy"].get<double>() < 1e-9,
          "mix: identical sentences stay pure");
    check(js["branch_weights"].size() == 1, "mix: one branch when identical");
  }

  RunResult cross = run("mix --sentence-a \"men are tasty\" --sentence-b "
                        "\"pancakes are tasty\" --params \"" + params + "\"");
  check(cross.status == 0, "mix: cross pair exits 0");
  nlohmann::json jc = parse_json_or_null(cross.out);
  check(!jc.is_discarded(), "mix: cross pair prints JSON");
  if (!jc.is_discarded()) {
    double entropy = jc["entropy"].get<double>();
    check(entropy >= -1e-9 && entropy <= 1.0 + 1e-9,
          "mix: entropy is at most one bit");
    double w0 = jc["branch_weights"][0].get<double>();
    double w1 = jc["branch_weights"][1].get<double>();
    check(std::abs(w0 + w1 - 1.0) < 1e-9, "mix: branch weights normalize");
    check(jc["success_probability"].get<double>() > 0.0,
          "mix: success probability is positive");
    check(std::abs(jc["fid_true"].get<double>() +
                   jc["fid_false"].get<double>() - 1.0) < 1e-9,
          "mix: pole fidelities sum to the trace");
  }

  RunResult skew = run("mix --sentence-a \"men are tasty\" --sentence-b "
                       "\"pancakes are tasty\" --p 1.0 --params \"" + params +
                       "\"");
  nlohmann::json jk = parse_json_or_null(skew.out);
  check(!jk.is_discarded(), "mix: skew prior prints JSON");
  if (!jk.is_discarded()) {
    check(std::abs(jk["branch_weights"][0].get<double>() - 1.0) < 1e-9 &&
              std::abs(jk["branch_weights"][1].get<double>()) < 1e-9,
          "mix: a unit prior collapses onto one branch");
  }

  RunResult bad = run("mix --sentence-a \"plays alice guitar\" --sentence-b "
                      "\"plays alice guitar\" --params \"" + params + "\"",
                      true);
  check(bad.status == 2, "mix: ungrammatical sentences exit 2");

  RunResult noparams = run("mix --sentence-a \"men are tasty\" --sentence-b "
                           "\"men are tasty\"", true);
  check(noparams.status != 0, "mix: missing required --params fails");
}

void test_experiment() {
  std::string params = g_dir + "/p0.json";
  std::string report = g_dir + "/report.json";
  RunResult r = run("experiment --params \"" + params + "\" --out \"" +
                    report + "\"");
  check(r.status == 0, "experiment: exits 0");
  check(exists(report), "experiment: writes the report");

  nlohmann::json out = parse_json_or_null(r.out);
  check(!out.is_discarded() && out.contains("avg_entropy"),
        "experiment: prints the summary JSON");

  nlohmann::json rep = parse_json_or_null(slurp(report));
  check(!rep.is_discarded(), "experiment: report parses as JSON");
  if (!rep.is_discarded()) {
    check(rep["pairs"].size() == 16, "experiment: report covers all 16 pairs");
    double ft = rep["avg_fid_true"].get<double>();
    double ff = rep["avg_fid_false"].get<double>();
    check(std::abs(ft + ff - 1.0) < 1e-9,
          "experiment: average pole fidelities sum to 1");
    check(rep.contains("diagnostics") &&
              rep["diagnostics"].contains("true_vs_true"),
          "experiment: report carries the diagnostics block");
  }

  std::string report2 = g_dir + "/report2.json";
  RunResult r2 = run("experiment --params \"" + params + "\" --out \"" +
                     report2 + "\"");
  check(r2.status == 0 && slurp(report) == slurp(report2),
        "experiment: reruns are byte-identical");
}

void test_plot() {
  std::string log = g_dir + "/la.csv";
  std::string svg = g_dir + "/curve.svg";
  RunResult r = run("plot --log \"" + log + "\" --out \"" + svg + "\"");
  check(r.status == 0, "plot: exits 0");
  std::string body = slurp(svg);
  check(body.rfind("<svg", 0) == 0, "plot: writes an SVG document");
  check(contains(body, "<polyline"), "plot: draws the curves");

  std::string svg2 = g_dir + "/curve2.svg";
  run("plot --log \"" + log + "\" --out \"" + svg2 + "\"");
  check(slurp(svg2) == body, "plot: reruns are byte-identical");

  std::string empty = g_dir + "/empty.csv";
  write_file(empty, "");
  RunResult bad = run("plot --log \"" + empty + "\" --out \"" + svg + "\"",
                      true);
  check(bad.status == 1, "plot: an empty curve exits 1");
  check(contains(bad.out, "error:"), "plot: empty curve reports an error");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  char tmpl[] = "/tmp/discopile_cli_XXXXXX";
  char* dir = mkdtemp(tmpl);
  if (!dir) {
    std::cerr << "cannot create scratch directory\n";
    return 2;
  }
  g_dir = dir;

  test_parse();
  test_train();
  test_train_convergence();
  test_mix();
  test_experiment();
  test_plot();

  std::string cleanup = "rm -rf \"" + g_dir + "\"";
  if (std::system(cleanup.c_str()) != 0) {
    std::cerr << "warning: could not remove " << g_dir << "\n";
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << g_failures << " check(s) failed\n";
  return 1;
}
