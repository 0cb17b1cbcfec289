#include <doctest.h>

#include <fstream>

#include "extclosure/reference_corpus.hpp"
#include "extclosure/ring_file.hpp"

using namespace extclosure;

TEST_CASE("ring files load") {
    const auto dual = load_ring_text("# dual numbers\np=2 vars=x\nx^2\n");
    CHECK(dual.algebra()->dim() == 2);

    const auto g = load_ring_text(reference_rings::kGorenstein4);
    CHECK(g.algebra()->dim() == 6);
    CHECK(g.presentation.ring.variables.size() == 4);

    const auto over5 = load_ring_text("p=2 vars=x\nx^3\n", "<t>", 5);
    CHECK(over5.algebra()->p() == 5);
}

TEST_CASE("bindings and element expressions") {
    const auto r = load_ring_text("p=3 vars=x,y\nx^2\ny^2\n\n@g = x + 2y\n@h=xy\n");
    CHECK(r.elements.count("g"));
    CHECK(r.element("g") == r.element("x+2y"));
    CHECK(r.element("h") == r.element("yx"));
    CHECK(r.element("x") == r.presentation.variable(0));
    CHECK_THROWS_AS(r.element("q"), Error);
}

TEST_CASE("syntax errors are located") {
    try {
        (void)load_ring_text("p=2 vars=x,y\nx^2\nx*2\ny^2\n", "bad.ring");
        FAIL("expected an error");
    } catch (const RingFileError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 2);
        CHECK(std::string(e.what()).rfind("bad.ring:3:2:", 0) == 0);
    }
    CHECK_THROWS_AS(load_ring_text("vars=x\nx^2\n"), RingFileError);
    CHECK_THROWS_AS(load_ring_text("p=4 vars=x\nx^2\n"), RingFileError);
    CHECK_THROWS_AS(load_ring_text("p=2 vars=x,x\nx^2\n"), RingFileError);
    CHECK_THROWS_AS(load_ring_text("p=2 vars=x\n@a = x\nx^2\n"), RingFileError);
    CHECK_THROWS_AS(load_ring_text("p=2 vars=x\nx^2\n@a\n"), RingFileError);
    CHECK_THROWS_AS(load_ring_text(""), RingFileError);
}

TEST_CASE("non-Artinian rings are rejected") {
    CHECK_THROWS_AS(load_ring_text("p=2 vars=x,y\nx^2\n"), InfiniteDimension);
}

TEST_CASE("missing files") {
    CHECK_THROWS_AS(load_ring("/nonexistent/ring/file.ring"), IoError);
}

TEST_CASE("reference corpus passes") {
    const auto checks = run_reference_corpus();
    CHECK(checks.size() == 20);
    for (const auto& c : checks) {
        CAPTURE(c.id);
        CHECK(c.passed);
    }
    const auto j = corpus_json(checks);
    CHECK(j["all_passed"] == true);
}
