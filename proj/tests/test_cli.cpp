#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cdg/cli.hpp"

using namespace cdg;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content = "") {
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/cdg_test_" + name;
    if (!content.empty()) {
      std::ofstream f(path);
      f << content;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: gamma emits a graph file") {
  auto r = run({"gamma", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "v a1\nv a2\nv b1\nv b2\ne a1 a2\ne a1 b1\ne a2 b2\ne b1 b2\n");
  CHECK(run({"gamma", "9", "9"}).code == kExitInput);  // over the vertex budget
  CHECK(run({"gamma", "0", "2"}).code == kExitInput);
  CHECK(run({"gamma", "x", "2"}).code == kExitUsage);
}

TEST_CASE("cli: classify piped graphs") {
  const std::string g22 = run({"gamma", "2", "2"}).out;
  auto occurs = run({"classify"}, g22);
  CHECK(occurs.code == kExitOccurs);
  CHECK(occurs.out.find("verdict: occurs") != std::string::npos);
  CHECK(occurs.out.find("witness: direct_product") != std::string::npos);

  const std::string g33 = run({"gamma", "3", "3"}).out;
  auto refuted = run({"classify", "-"}, g33);
  CHECK(refuted.code == kExitNotOccurs);
  CHECK(refuted.out.find("verdict: not_occurs") != std::string::npos);
  CHECK(refuted.out.find("rule: all_admissible") != std::string::npos);
}

TEST_CASE("cli: classify unknown input shapes") {
  auto r = run({"classify"}, "v a\nv b\nv c\nv x\nv y\ne a b\ne a c\ne b c\ne x y\n");
  CHECK(r.code == kExitUnknown);
  CHECK(r.out.find("verdict: unknown") != std::string::npos);
}

TEST_CASE("cli: classify errors") {
  CHECK(run({"classify", "/nonexistent/file"}).code == kExitInput);
  CHECK(run({"classify"}, "v a\ne a b\n").code == kExitInput);
  CHECK(run({"bogus-command"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("cli: certificate files verify") {
  TempFile graph_file("verify.graph", run({"gamma", "3", "2"}).out);
  TempFile cert_file("verify.cert");
  auto c = run({"classify", graph_file.path, "--cert", cert_file.path});
  CHECK(c.code == kExitNotOccurs);

  auto v1 = run({"verify", cert_file.path});
  CHECK(v1.code == 0);
  CHECK(v1.out == "valid\n");

  auto v2 = run({"verify", graph_file.path, cert_file.path});
  CHECK(v2.code == 0);

  // a different graph than the embedded one is refused
  TempFile other("other.graph", run({"gamma", "2", "2"}).out);
  CHECK(run({"verify", other.path, cert_file.path}).code == kExitInput);

  // tampering with the document breaks it
  std::ifstream in(cert_file.path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto pos = text.find("\"b1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "\"a1\"");
  TempFile tampered("tampered.cert", text);
  auto v3 = run({"verify", tampered.path});
  CHECK(v3.code == kExitInput);
  CHECK(v3.out.find("invalid") != std::string::npos);
}

TEST_CASE("cli: json output is a parsable document") {
  auto r = run({"classify", "--json"}, run({"gamma", "2", "2"}).out);
  CHECK(r.code == kExitOccurs);
  CertificateDocument doc = document_from_string(r.out);
  CHECK(doc.verdict.tag == Verdict::Tag::occurs);
  CHECK(verify_certificate(doc.graph, doc.verdict).valid);
}

TEST_CASE("cli: partition report") {
  TempFile f("partition.graph",
             "v a1\nv a2\nv a3\nv b1\nv b2\nv b3\n"
             "e a1 a2\ne a1 a3\ne a2 a3\ne b1 b2\ne b1 b3\ne b2 b3\ne a2 b2\ne a3 b3\n");
  auto r = run({"partition", f.path, "a1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rho1: a1\n") != std::string::npos);
  CHECK(r.out.find("rho2: a2 a3\n") != std::string::npos);
  CHECK(r.out.find("rho3: b2 b3\n") != std::string::npos);
  CHECK(r.out.find("rho4: b1\n") != std::string::npos);
  CHECK(r.out.find("rho3_too_small") != std::string::npos);

  CHECK(run({"partition", f.path, "zz"}).code == kExitInput);
  TempFile c4("partition_c4.graph", run({"gamma", "2", "2"}).out);
  CHECK(run({"partition", c4.path, "a1"}).code == kExitInput);  // diameter 2
}

TEST_CASE("cli: enumerate") {
  auto r1 = run({"enumerate", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out.find("graphs: 1\n") != std::string::npos);
  CHECK(r1.out.find("occurs: 1\n") != std::string::npos);

  auto r = run({"enumerate", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graphs: 4\n") != std::string::npos);
  CHECK(r.out.find("palfy_passing: 3\n") != std::string::npos);
  CHECK(r.out.find("occurs: 3\n") != std::string::npos);
  CHECK(r.out.find("unknown: 0\n") != std::string::npos);

  // the 4-cycle shows up among the n=4 classes as a direct product
  auto r4 = run({"enumerate", "4"});
  bool c4_occurs = false;
  std::istringstream lines(r4.out);
  std::string line;
  while (std::getline(lines, line))
    if (line.find("v=4 e=4") != std::string::npos &&
        line.find("verdict=occurs via=direct_product") != std::string::npos)
      c4_occurs = true;
  CHECK(c4_occurs);

  auto serial = run({"enumerate", "5"});
  auto parallel = run({"enumerate", "5", "--jobs", "4"});
  CHECK(serial.out == parallel.out);

  TempFile report("enum.report");
  auto r2 = run({"enumerate", "4", "--report", report.path});
  CHECK(r2.code == 0);
  std::ifstream in(report.path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == r2.out);

  CHECK(run({"enumerate", "9"}).code == kExitInput);
}

TEST_CASE("cli: export-dot") {
  auto r = run({"export-dot"}, "v b\nv a\ne a b\n");
  CHECK(r.code == 0);
  CHECK(r.out == "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
}

TEST_CASE("cli: seed knowledge base") {
  // K3 + K3 is unknown by default; a seed file settles it as occurring.
  const std::string k3k3 =
      "v a\nv b\nv c\nv x\nv y\nv z\n"
      "e a b\ne a c\ne b c\ne x y\ne x z\ne y z\n";
  CHECK(run({"classify"}, k3k3).code == kExitUnknown);

  TempFile seed("seed.json", R"({"entries": [{"tag": "twin_triangles", "graph": {
    "vertices": ["a", "b", "c", "x", "y", "z"],
    "edges": [["a","b"],["a","c"],["b","c"],["x","y"],["x","z"],["y","z"]]}}]})");
  auto r = run({"classify", "--seed-kb", seed.path}, k3k3);
  CHECK(r.code == kExitOccurs);
  CHECK(r.out.find("known_example(twin_triangles)") != std::string::npos);

  TempFile bad_seed("bad_seed.json", "{");
  CHECK(run({"classify", "--seed-kb", bad_seed.path}, k3k3).code == kExitInput);
}

TEST_CASE("cli: narrow edge family flag is honored") {
  const std::string g33 = run({"gamma", "3", "3"}).out;
  auto broad = run({"classify", "--json"}, g33);
  auto narrow = run({"classify", "--narrow-sylow-edges", "--json"}, g33);
  CHECK(broad.code == kExitNotOccurs);
  CHECK(narrow.code == kExitNotOccurs);
  CHECK(broad.out.find("\"edge_family\": \"broad\"") != std::string::npos);
  CHECK(narrow.out.find("\"edge_family\": \"narrow\"") != std::string::npos);
}
