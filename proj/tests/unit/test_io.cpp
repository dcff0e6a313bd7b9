#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gcenter/io.hpp"

using namespace gcenter::io;
namespace fs = std::filesystem;

TEST_SUITE("io") {

TEST_CASE("csv quoting follows RFC 4180") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("with,comma") == "\"with,comma\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
  CHECK(csv_row({"a", "b,c", "d"}) == "a,\"b,c\",d\r\n");
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -2.5e-7, 1365.0, 0.1, 1e300}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("atomic_write leaves no temporary behind") {
  const fs::path dir = fs::temp_directory_path() / "gcenter_io_test";
  fs::remove_all(dir);
  const fs::path target = dir / "nested" / "out.csv";

  atomic_write(target, "x,y\r\n1,2\r\n");
  CHECK(fs::exists(target));
  CHECK(!fs::exists(target.string() + ".tmp"));

  std::ifstream in(target, std::ios::binary);
  const std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  CHECK(content == "x,y\r\n1,2\r\n");

  // overwrite is atomic as well
  atomic_write(target, "replaced");
  std::ifstream in2(target, std::ios::binary);
  const std::string content2((std::istreambuf_iterator<char>(in2)),
                             std::istreambuf_iterator<char>());
  CHECK(content2 == "replaced");
  fs::remove_all(dir);
}

}  // TEST_SUITE
