#include <sstream>
#include <stdexcept>

#include "lhuilier/families.hpp"

namespace lhuilier {

namespace {

struct RawRow {
    std::int64_t heading;
    const char* entries;
};

// Transcribed row by row from the printed table, entries in units of pi.
constexpr RawRow kRows[] = {
    {30, "1/30 1/30 1/15 2/15 4/15"},
    {30, "1/15 1/30 1/15 7/30 11/30"},
    {30, "2/15 1/30 2/15 7/30 13/30"},
    {30, "7/30 1/15 2/15 7/30 7/15"},
    {40, "1/8 1/40 7/40 9/40 17/40"},
    {48, "1/16 1/48 5/48 11/48 17/48"},
    {48, "3/16 1/48 13/48 17/48 19/48"},
    {60, "1/60 1/60 1/20 1/12 17/60"},
    {60, "1/60 1/60 1/12 7/60 3/20"},
    {60, "1/20 1/60 1/20 13/60 5/12"},
    {60, "1/20 1/60 7/60 13/60 19/60"},
    {60, "1/20 1/20 1/12 7/60 19/60"},
    {60, "1/12 1/60 1/12 13/60 9/20"},
    {60, "1/12 1/60 1/12 7/20 23/60"},
    {60, "1/12 1/60 11/60 13/60 23/60"},
    {60, "1/12 1/20 1/12 11/60 23/60"},
    {60, "1/12 1/12 3/20 11/60 13/60"},
    {60, "7/60 1/60 7/60 7/20 5/12"},
    {60, "7/60 1/20 7/60 11/60 5/12"},
    {60, "3/20 1/60 3/20 23/60 5/12"},
    {60, "3/20 1/60 17/60 19/60 23/60"},
    {60, "3/20 1/12 3/20 17/60 19/60"},
    {60, "11/60 1/12 7/60 11/60 9/20"},
    {60, "11/60 1/12 11/60 17/60 7/20"},
    {60, "13/60 1/20 1/12 13/60 29/60"},
    {60, "13/60 1/12 13/60 19/60 7/20"},
    {60, "1/4 1/60 13/60 5/12 9/20"},
    {60, "1/4 1/60 7/20 23/60 5/12"},
    {60, "1/4 1/30 7/30 11/30 13/30"},
    {60, "1/4 1/20 11/60 23/60 5/12"},
    {60, "1/4 1/12 17/60 19/60 7/20"},
    {72, "1/8 1/72 7/72 23/72 25/72"},
    {72, "1/8 1/24 7/72 17/72 31/72"},
    {84, "1/84 1/84 5/84 1/12 17/84"},
    {84, "5/84 1/84 5/84 25/84 5/12"},
    {84, "1/12 1/84 1/12 25/84 37/84"},
    {84, "1/12 1/12 11/84 13/84 23/12"},
    {84, "11/84 1/12 11/84 19/84 29/84"},
    {84, "13/84 1/12 13/84 19/84 31/84"},
    {84, "17/84 1/84 17/84 5/12 37/84"},
    {84, "19/84 11/84 13/84 19/84 5/12"},
    {84, "1/4 1/84 25/84 5/12 37/84"},
    {84, "1/4 1/12 19/84 29/84 31/84"},
    {120, "1/120 1/120 7/120 11/120 17/120"},
    {120, "7/120 1/120 7/120 43/120 49/120"},
    {120, "11/120 1/120 11/120 43/120 53/120"},
    {120, "13/120 13/120 19/120 23/120 29/120"},
    {120, "1/8 1/120 23/120 47/120 49/120"},
    {120, "1/8 1/120 9/40 41/120 17/40"},
    {120, "1/8 1/120 31/120 41/120 49/120"},
    {120, "1/8 1/40 7/120 47/120 17/40"},
    {120, "1/8 1/40 7/40 31/120 49/120"},
    {120, "1/8 7/120 17/120 23/120 47/120"},
    {120, "1/8 7/120 17/120 31/120 41/120"},
    {120, "1/8 17/120 7/40 23/120 9/40"},
    {120, "17/120 1/120 17/120 49/120 53/120"},
    {120, "19/120 13/120 19/120 31/120 37/120"},
    {120, "23/120 13/120 23/120 31/120 41/120"},
    {120, "29/120 13/120 29/120 37/120 41/120"},
    {120, "1/4 1/120 43/120 49/120 53/120"},
    {120, "1/4 13/120 31/120 37/120 41/120"},
};

}  // namespace

const std::vector<SporadicRow>& sporadic_table() {
    static const std::vector<SporadicRow> rows = [] {
        std::vector<SporadicRow> out;
        int index = 0;
        for (const auto& raw : kRows) {
            SporadicRow r;
            r.index = index++;
            r.heading = raw.heading;
            std::istringstream in(raw.entries);
            std::string item;
            int k = 0;
            while (in >> item) {
                if (k >= 5) throw std::logic_error("sporadic table row has too many entries");
                r.tuple.x[k++] = parse_angle(item);
            }
            if (k != 5) throw std::logic_error("sporadic table row has too few entries");
            out.push_back(r);
        }
        return out;
    }();
    return rows;
}

}  // namespace lhuilier
