#include "dstokes/corpus.hpp"

#include <stdexcept>

namespace dstokes::corpus {

namespace {

const char* kCircle = R"(curve circle
loop 0 ccw
geom looppath 0 5 0 0 5 -5 0 0 -5
geom face outer 10 0
geom face in:0 0 0
)";

// Vertical figure of eight: upper lobe clockwise (-1), lower lobe
// counterclockwise (+1). Half-edges 0..3 are the germs NE,NW,SW,SE at the
// crossing.
const char* kFigureEight = R"(curve figure-eight
vertex 1 0 1 2 3
twin 0 1
twin 2 3
strand 1 2
strand 2 1
outer 1
base 0
geom path 0 0 -1 2 0 3 1 2 0 0 -1 -2 0 -3 1 -2
geom vertex 1 0 0
geom face dart:0 0 2
geom face dart:2 0 -2
geom face dart:1 5 0
)";

// Counterclockwise round trip with one positively nested kink: regions
// 0 (outer), 1 (middle), 2 (kink interior).
const char* kOneKink = R"(curve one-kink
vertex 1 0 1 2 3
twin 0 1
twin 2 3
strand 0 3
strand 3 0
outer 2
base 2
geom path 0 0 2 2 0 4 -2 2 0 0 2 -2 6 0 0 6 -6 0 -2 -2
geom vertex 1 0 0
geom face dart:0 0 2
geom face dart:1 0 5
geom face dart:2 8 0
)";

// Two positive kinks in a row; both crossings have index 1.
const char* kTwoKink = R"(curve two-kink
vertex 1 0 1 2 3
vertex 2 4 5 6 7
twin 0 1
twin 2 7
twin 3 6
twin 4 5
strand 0 3
strand 3 4
strand 4 7
strand 7 0
outer 2
base 2
geom path 0 0 2 2 0 4 -2 2 0 0 2 -2 8 -2 10 0 12 2 10 4 8 2 10 0 12 -2 16 0 5 12 -6 0 -2 -2
geom vertex 1 0 0
geom vertex 2 10 0
geom face dart:0 0 2
geom face dart:4 10 2
geom face dart:1 5 8
geom face dart:2 20 0
)";

const char* kSphereMovie = R"(movie sphere shift -3/2
event birth ccw in outer
event death 0
)";

const char* kTorusMovie = R"(movie torus shift -3/2
event birth ccw in outer
event birth ccw in outer
event saddle loop:0 loop:1
event saddle loop:2 loop:2
event death 3
event death 4
)";

#include "corpus_authored.inc"

} // namespace

const std::vector<Entry>& curves() {
    static const std::vector<Entry> entries = {
        {"circle", kCircle},     {"figure-eight", kFigureEight},
        {"one-kink", kOneKink},  {"two-kink", kTwoKink},
        {"trefoil", kTrefoil},   {"six-crossing", kSixCrossing},
    };
    return entries;
}

const std::vector<Entry>& movies() {
    static const std::vector<Entry> entries = {
        {"sphere", kSphereMovie},
        {"torus", kTorusMovie},
        {"triple-point", kTriplePointMovie},
    };
    return entries;
}

const Entry& curve(const std::string& name) {
    for (const auto& e : curves())
        if (e.name == name)
            return e;
    throw std::out_of_range("no corpus curve '" + name + "'");
}

const Entry& movie(const std::string& name) {
    for (const auto& e : movies())
        if (e.name == name)
            return e;
    throw std::out_of_range("no corpus movie '" + name + "'");
}

} // namespace dstokes::corpus
