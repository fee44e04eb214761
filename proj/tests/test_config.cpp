// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "pshrink/config.hpp"

using namespace pshrink;

TEST_CASE("key=value lines parse with trimming") {
    ConfigMap cfg = parse_config(
        "rate = 0.2\n"
        "level=3\n"
        "  mode   =   performance  \n"
        "providers.list = echo,noise\n");
    CHECK(cfg.size() == 4);
    CHECK(cfg.at("rate") == "0.2");
    CHECK(cfg.at("level") == "3");
    CHECK(cfg.at("mode") == "performance");
    CHECK(cfg.at("providers.list") == "echo,noise");
}

TEST_CASE("comments and blank lines are ignored") {
    ConfigMap cfg = parse_config(
        "# full line comment\n"
        "\n"
        "rate = 0.5   # trailing comment\n"
        "   \t  \n"
        "# another = looks-like-a-pair\n");
    CHECK(cfg.size() == 1);
    CHECK(cfg.at("rate") == "0.5");
}

TEST_CASE("later assignments win") {
    ConfigMap cfg = parse_config("rate = 0.2\nrate = 0.4\n");
    CHECK(cfg.at("rate") == "0.4");
}

TEST_CASE("empty values and missing trailing newline are fine") {
    ConfigMap cfg = parse_config("query =\nlevel = 2");
    CHECK(cfg.at("query").empty());
    CHECK(cfg.at("level") == "2");
}

TEST_CASE("malformed lines name their line number") {
    CHECK_THROWS_WITH(parse_config("rate = 0.2\nnot a pair\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_config("bad key! = 3\n"),
                      Catch::Matchers::ContainsSubstring("invalid key"));
    CHECK_THROWS_WITH(parse_config("= value\n"),
                      Catch::Matchers::ContainsSubstring("invalid key"));
}

TEST_CASE("typed getters convert or fail loudly") {
    ConfigMap cfg = parse_config(
        "rate = 0.25\nlevel = 4\nsmooth = yes\nverbose = off\nname = run-a\nbad = 1.5x\n");
    CHECK(get_double(cfg, "rate", 1.0) == 0.25);
    CHECK(get_double(cfg, "missing", 0.75) == 0.75);
    CHECK(get_int(cfg, "level", 1) == 4);
    CHECK(get_int(cfg, "missing", 7) == 7);
    CHECK(get_bool(cfg, "smooth", false));
    CHECK_FALSE(get_bool(cfg, "verbose", true));
    CHECK(get_bool(cfg, "missing", true));
    CHECK(get_string(cfg, "name") == "run-a");
    CHECK(get_string(cfg, "missing", "dflt") == "dflt");

    CHECK_THROWS_WITH(get_double(cfg, "bad", 0.0),
                      Catch::Matchers::ContainsSubstring("bad"));
    CHECK_THROWS_WITH(get_int(cfg, "rate", 0),
                      Catch::Matchers::ContainsSubstring("rate"));
    CHECK_THROWS_WITH(get_bool(cfg, "name", false),
                      Catch::Matchers::ContainsSubstring("name"));
}

TEST_CASE("load_config reads files and reports unreadable paths") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "pshrink_config_test.conf";
    {
        std::ofstream out(path);
        out << "# saved settings\nrate = 0.33\n";
    }
    ConfigMap cfg = load_config(path);
    CHECK(get_double(cfg, "rate", 0.0) == 0.33);
    fs::remove(path);

    CHECK_THROWS_WITH(load_config(path), Catch::Matchers::ContainsSubstring("cannot read"));
}
