// Golden copies of the two reference tables, embedded so the CLI's
// acceptance run is self-contained. The committed CSV files under data/
// hold the same bytes; a unit test keeps the two in sync.
#pragma once

namespace hookpart::golden {

inline constexpr const char* kTable1Csv =
    "n\\m,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14\n"
    "1,1\n"
    "2,1,1\n"
    "3,2,1,1\n"
    "4,3,3,1,1\n"
    "5,5,5,4,1,1\n"
    "6,8,10,7,5,1,1\n"
    "7,13,18,16,9,6,1,1\n"
    "8,21,33,31,23,11,7,1,1\n"
    "9,34,59,62,47,31,13,8,1,1\n"
    "10,55,105,119,101,66,40,15,9,1,1\n"
    "11,89,185,227,205,151,88,50,17,10,1,1\n"
    "12,144,324,426,414,321,213,113,61,19,11,1,1\n"
    "13,233,564,792,818,681,471,288,141,73,21,12,1,1\n"
    "14,377,977,1458,1598,1406,1044,659,377,172,86,23,13,1,1\n"
    "15,610,1685,2663,3082,2867,2240,1520,889,481,206,100,25,14,1,1\n"
;

inline constexpr const char* kTable2Csv =
    "n\\m,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14\n"
    "1,1\n"
    "2,1,0\n"
    "3,2,-1,0\n"
    "4,3,0,-2,0\n"
    "5,5,0,-1,-3,0\n"
    "6,8,2,-3,-2,-4,0\n"
    "7,13,5,-2,-7,-3,-5,0\n"
    "8,21,12,-2,-8,-12,-4,-6,0\n"
    "9,34,25,3,-15,-16,-18,-5,-7,0\n"
    "10,55,50,14,-18,-35,-26,-25,-6,-8,0\n"
    "11,89,96,42,-22,-54,-63,-38,-33,-7,-9,0\n"
    "12,144,180,102,-12,-93,-108,-100,-52,-42,-8,-10,0\n"
    "13,233,331,228,26,-137,-210,-183,-147,-68,-52,-9,-11,0\n"
    "14,377,600,481,140,-192,-362,-385,-282,-205,-86,-63,-10,-12,0\n"
    "15,610,1075,978,419,-215,-627,-720,-631,-408,-275,-106,-75,-11,-13,0\n"
;

} // namespace hookpart::golden
