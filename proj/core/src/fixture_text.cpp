// Compiled-in copies of the files under core/fixtures/. A unit test checks
// they stay byte-identical to the shipped files.

#include <string_view>

namespace reroute::fixture_data {

extern const std::string_view kBaseHighway = R"fixture(# Highway network, base case.
# Three workshops with identical times, 10 km links, 60 km/h everywhere.
# The vehicle broke down halfway along the 6 -> 7 carriageway (link 7).

[nodes]
# id, role
1, workshop
2, workshop
3, workshop
4, warehouse
5, interchange
6, interchange
7, interchange
8, interchange
9, interchange
10, interchange
11, customer

[links]
# id, tail, head, length_km, direction
1, 1, 5, 10, two-way
2, 2, 7, 10, two-way
3, 2, 8, 10, two-way
4, 3, 10, 10, two-way
5, 4, 5, 10, two-way
6, 5, 6, 10, two-way
7, 6, 7, 10, two-way
8, 7, 8, 10, two-way
9, 8, 9, 10, two-way
10, 9, 10, 10, two-way
11, 10, 11, 10, two-way

[breakdown]
# link, first_km, second_km, first_direction, second_direction
7, 5, 5, forward, forward

[workshops]
# node, schedule_min, maintenance_min
1, 10, 100
2, 10, 100
3, 10, 100

[speeds]
# route, link, km_per_h
1, *, 60
2, *, 60
3, *, 60
)fixture";

extern const std::string_view kModifiedHighway = R"fixture(# Highway network, modified case.
# Same topology as the base case with heterogeneous workshop times and
# link lengths. Links 1-4 are non-urban roads, links 5-13 are highway.

[nodes]
# id, role
1, workshop
2, workshop
3, workshop
4, warehouse
5, interchange
6, interchange
7, interchange
8, interchange
9, interchange
10, interchange
11, customer

[links]
# id, tail, head, length_km, direction
1, 1, 5, 10, two-way
2, 2, 7, 50, two-way
3, 2, 8, 60, two-way
4, 3, 10, 30, two-way
5, 4, 5, 20, two-way
6, 5, 6, 15, two-way
7, 6, 7, 120, two-way
8, 7, 8, 40, two-way
9, 8, 9, 30, two-way
10, 9, 10, 60, two-way
11, 10, 11, 30, two-way

[breakdown]
# link, first_km, second_km, first_direction, second_direction
7, 30, 90, forward, forward

[workshops]
# node, schedule_min, maintenance_min
1, 10, 100
2, 20, 200
3, 30, 300

[speeds]
# route, link, km_per_h
# highway defaults: unloaded tow truck / loaded tow truck / repaired vehicle
1, *, 100
2, *, 80
3, *, 100
# non-urban roads
1, 1, 60
1, 2, 60
1, 3, 60
1, 4, 60
2, 1, 30
2, 2, 30
2, 3, 30
2, 4, 30
3, 1, 60
3, 2, 60
3, 3, 60
3, 4, 60
)fixture";

extern const std::string_view kUrbanPaths = R"fixture(# Urban network, 26 nodes and 42 links (links 41 and 42 are the two halves
# of the broken-down carriageway). Only link lengths and the optimal routes
# through workshop 6 are recorded; the topology itself is not.

[links]
# id, length_km
1, 10
2, 50
3, 60
4, 30
5, 20
6, 150
7, 120
8, 40
9, 30
10, 60
11, 30
12, 30
13, 90
14, 10
15, 50
16, 60
17, 30
18, 20
19, 15
20, 120
21, 40
22, 30
23, 60
24, 30
25, 30
26, 90
27, 10
28, 50
29, 60
30, 30
31, 20
32, 15
33, 120
34, 40
35, 30
36, 60
37, 30
38, 30
39, 90
40, 100
41, 60
42, 90

[speeds]
# route, km_per_h
1, 30
2, 20
3, 30

[workshops]
# node, schedule_min, maintenance_min
1, 10, 600
2, 20, 500
3, 30, 400
4, 40, 300
5, 50, 200
6, 60, 100

[routes]
# route, workshop, links in travel order, nodes in travel order
1, 6, 19 32 14 27 9 22 5 41, 6 24 20 4 16 15 10 11 26
2, 6, 42 30 31 32 19, 26 12 17 20 24 6
3, 6, 20, 6 25
)fixture";

}  // namespace reroute::fixture_data
