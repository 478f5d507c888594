#include <doctest.h>

#include <json.hpp>

#include "cambrian/io.hpp"

using namespace cambrian;

TEST_CASE("heap exports") {
    CoxeterSystem a4(CoxeterType::parse("A4"));
    CoxeterElement c = element_from_word(a4, {2, 1, 0, 3});

    // the running 20-letter example embeds to a heap with 21 covers
    Word w;
    for (char ch : std::string("32123423212343213234")) w.letters.push_back(ch - '1');
    Word emb = embed_in_power(w, a4, c);
    Heap heap = build_heap(emb, a4);
    add_planar_coords(heap, a4, c);

    std::string dot = heap_to_dot(heap);
    size_t nodes = 0, arrows = 0;
    for (size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1))
        ++nodes;
    for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
    CHECK(nodes == 20);
    CHECK(arrows == 21);

    auto j = nlohmann::json::parse(heap_to_json(heap));
    CHECK(j["schema"] == 1);
    CHECK(j["letters"].size() == 20);
    CHECK(j["covers"].size() == 21);
    CHECK(j["coords"].size() == 20);

    // byte-identical on repetition
    CHECK(heap_to_json(heap) == heap_to_json(heap));
    CHECK(heap_to_dot(heap) == heap_to_dot(heap));
}

TEST_CASE("two-cover exports") {
    CoxeterSystem a4(CoxeterType::parse("A4"));
    TwoCover tc(a4, element_from_bits(a4, 0));
    auto j = nlohmann::json::parse(two_cover_to_json(tc));
    CHECK(j["schema"] == 1);
    CHECK(j["vertices"].size() == 20);  // n*h
    CHECK(j["edges"].size() == 30);
    CHECK(j["tiles"].size() == 10);
    CHECK(j["kappa_c"].size() == 3);
    CHECK(j["kappa_c_star"].size() == 3);

    std::string dot = two_cover_to_dot(tc);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
    CHECK(two_cover_to_dot(tc) == two_cover_to_dot(tc));
}
