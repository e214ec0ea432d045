#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "test_support.hpp"

namespace {

struct Proc {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* b = std::getenv("HOLOPI_BIN");
  return b ? b : "holopi";
}

Proc run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + binary() + " " + args + " 2>&1";
  Proc r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<holopi::Json> json_lines(const std::string& out) {
  std::vector<holopi::Json> v;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(holopi::Json::parse(line));
  return v;
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
  Proc ok = run("verify --id rogers --order 40");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("PASS  rogers"), std::string::npos);
  EXPECT_EQ(run("verify --id no-such-id").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --id rogers --order 5").code, 2);
}

TEST(Cli, VerifyAllOneLinePerEntry) {
  Proc r = run("verify-all --order 30 --jobs 4 --format json");
  EXPECT_EQ(r.code, 0) << r.out;
  auto lines = json_lines(r.out);
  EXPECT_EQ(lines.size(), holopi::testing::catalog().identities().size());
  for (const auto& j : lines) EXPECT_TRUE(j["pass"].get<bool>()) << j.dump();
}

TEST(Cli, JobsDoNotChangeReports) {
  auto strip = [](std::vector<holopi::Json> v) {
    for (auto& j : v) j.erase("elapsedMs");
    return v;
  };
  auto one = strip(json_lines(run("verify-all --jobs 1 --format json").out));
  auto eight = strip(json_lines(run("verify-all --jobs 8 --format json").out));
  EXPECT_EQ(one, eight);
}

TEST(Cli, Satellite) {
  Proc h = run("satellite --kernel h10 --deg 1 --terms 40");
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("P = 4*x, Q = 12*x + 3, R = 2*x - 2"), std::string::npos) << h.out;
  Proc g = run("satellite --kernel level24 --deg 1 --terms 40");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("P = 2*x, Q = 2*x + 2, R = 2*x - 1"), std::string::npos) << g.out;
  Proc none = run("satellite --kernel h10 --deg 0 --terms 40");
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.out.find("no satellite found"), std::string::npos);
}

TEST(Cli, Pi) {
  Proc r = run("pi --id r28 --digits 100 --format json");
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = json_lines(r.out).at(0);
  EXPECT_GE(j["agreedDigits"].get<long>(), 100);
  Proc d = run("pi --id table1-N1-plus --digits 50");
  EXPECT_EQ(d.code, 1);
  EXPECT_NE(d.out.find("DivergenceDetected"), std::string::npos);
  EXPECT_EQ(run("pi --id eq520 --digits 40").code, 0);
  EXPECT_EQ(run("pi --id rogers").code, 2);
}

TEST(Cli, QSeqGuessCatalog) {
  EXPECT_EQ(run("q --id par --order 25").code, 0);
  Proc s = run("seq --id domb --terms 4");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("1, 4, 28, 256, 2716"), std::string::npos);
  EXPECT_EQ(run("guess --id domb --max-order 2 --max-degree 3").code, 0);
  Proc c = run("catalog --format json");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(json_lines(c.out).size(), holopi::testing::catalog().identities().size());
}

TEST(Cli, CatalogOverride) {
  std::string path = ::testing::TempDir() + "holopi_small_catalog.json";
  std::ofstream(path) << R"({"sequences": [{"id": "ones", "recurrence": {"coeffs": [[1], [-1]], "initial": [1]}}],
    "identities": [{"id": "only", "kind": "sequence", "a": "ones", "b": "ones"}]})";
  Proc flag = run("catalog --catalog " + path);
  EXPECT_EQ(flag.code, 0);
  EXPECT_EQ(flag.out, "only  sequence  []\n");
  Proc env = run("verify --id only", "HOLOPI_CATALOG=" + path);
  EXPECT_EQ(env.code, 0) << env.out;
  EXPECT_EQ(run("verify --id rogers", "HOLOPI_CATALOG=" + path).code, 2);
  EXPECT_EQ(run("catalog --catalog /nonexistent/catalog.json").code, 2);
}
