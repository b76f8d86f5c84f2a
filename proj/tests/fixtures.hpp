#pragma once

#include <string>

namespace fx {

// 11 positive, 4 negative vertices, 15 saddles
inline const char* kDisc =
    "[[4.1,6,7],1],[[9,10],1],[[8.2,10,11],1],[[4,8.1,11],1],[[4,8],1],[[0.1,3,7],-1],[[0.1,7,8],-1],"
    "[[0.2,2,4.1,6],-1],[[0.2,6,7],-1],[[5,6],1],[[1,5],1],[[0.2,2,4.1,7],1],[[0.1,3,8],1],[[4,8.1,11],-1],"
    "[[8.2,10,11],-1]";

inline const char* kDiscEW =
    "(7,6) (10,9) (11,10) (11,4) (8,4) -(7,3) -(8,7) -(6,2) -(7,6) (6,5) (5,1) (7,2) (8,3) -(11,4) -(11,10)";

inline const char* kDiscBW = "(6,5) d(6,2) (5,2) d(4,2) (5,4) (4,1) -d(5,2) -d(6,2)";

// the disc with 13 positive and 4 negative vertices; bare pairs are positive aa-saddles
inline const char* kBig =
    "[[0.1,4,5.1,8],-1],[[3,0.2,7,5.2],-1],[2,6],[1,6],[[3,0.2,7,5.2],1],[[0.1,4,5.1,8],1],[5,13],"
    "[[0.1,4,12],-1],[[3,0.2,11],-1],[5,10],[1,9],[2,10],[[3,0.2,11],1],[[0.1,4,12],1],[12,13],[9,11]";

inline const char* kBigEW =
    "-(8,4) -(7,3) (6,2) (6,1) (7,3) (8,4) (13,5) -(12,4) -(11,3) (10,5) (9,1) (10,2) (11,3) (12,4) (13,12) (11,9)";

inline const char* kBigBW =
    "(4,2) (4,1) (9,3) d(8,3) d(8,3) (8,5) (7,1) (8,2) -d(8,3) -d(8,3) (9,8) (7,5)";

// the eight (8,4) discs without end-tiles; the free aa-saddle is written unsigned
inline const char* kD[8] = {
    "-[3.1,5,8],-[4,5.1,7],[3.1,6,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],-[1,2,5.1],-[2,3,5.1],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],-[4,5.1,7],[3.1,6,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],-[1,3,5.1],[1,2],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],-[4,5.1,7],[3.1,6,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],[2,3],-[1,3,5.1],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],-[4,5.1,7],[3.1,6,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[4,5],[2,3.1,5],-[1,3,5.1],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],-[4,5.1,7],[3.1,7,8],[3.1,6,7],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],-[1,3,5.1],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],-[4,5.1,7],[3.1,6,8],[7,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],-[1,3,5.1],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],-[4,5.1,7],[6,7],[3.1,6,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],-[1,3,5.1],[0.2,2,6],[0.1,3,5.1,7]",
    "-[3.1,5,8],[4,5],-[4,5.1,7],[3.1,6,8],-[0.1,3,7],-[0.2,2,3.1,6],[1,4,5.1],[2,3.1,5],-[1,3,5.1],[0.2,2,6],[0.1,3,5.1,7]"};

}  // namespace fx
