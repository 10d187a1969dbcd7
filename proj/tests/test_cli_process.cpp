#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

struct Proc {
  int code;
  std::string out;
};

Proc exec(const std::string& args) {
  const std::string cmd = std::string(HILBERT_FORMS_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("exit codes of the installed binary") {
  CHECK(exec("bounds --alpha 0.5").code == 0);
  CHECK(exec("bounds --alpha -1").code == 2);
  CHECK(exec("bounds --alpha").code == 2);
  CHECK(exec("sandwich --alpha-min 1.5").code == 2);
  CHECK(exec("verify --suite unknown").code == 2);
  CHECK(exec("verify --suite signs").code == 0);
  CHECK(exec("verify --suite lemma4").code == 1);
  CHECK(exec("scan --output /nonexistent-dir/scan.csv").code == 1);
  CHECK(exec("--version").code == 0);
}

TEST_CASE("stdout of identical invocations is identical") {
  const Proc a = exec("scan --steps 201");
  const Proc b = exec("scan --steps 201");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("alpha,two_over_alpha,", 0) == 0);
}

TEST_CASE("seed info names the version") {
  const Proc p = exec("--seed-info");
  CHECK(p.code == 0);
  CHECK(p.out.rfind("hilbert-forms ", 0) == 0);
}
