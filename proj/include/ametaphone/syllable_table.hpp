// Copyright 2026 The ametaphone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/gen_syllable_table.py from the Unicode 13.0.0 character database.
// Do not edit by hand.

#pragma once

#include <array>

#include "ametaphone/syllable.hpp"

namespace ametaphone::detail {

inline constexpr std::array<SyllableRecord, 326> kSyllableTable{{
    {0x1200, 0x1200,  1},  // ሀ HA
    {0x1201, 0x1200,  2},  // ሁ HU
    {0x1202, 0x1200,  3},  // ሂ HI
    {0x1203, 0x1200,  4},  // ሃ HAA
    {0x1204, 0x1200,  5},  // ሄ HEE
    {0x1205, 0x1200,  6},  // ህ HE
    {0x1206, 0x1200,  7},  // ሆ HO
    {0x1207, 0x1200,  8},  // ሇ HOA
    {0x1208, 0x1208,  1},  // ለ LA
    {0x1209, 0x1208,  2},  // ሉ LU
    {0x120A, 0x1208,  3},  // ሊ LI
    {0x120B, 0x1208,  4},  // ላ LAA
    {0x120C, 0x1208,  5},  // ሌ LEE
    {0x120D, 0x1208,  6},  // ል LE
    {0x120E, 0x1208,  7},  // ሎ LO
    {0x120F, 0x1208,  8},  // ሏ LWA
    {0x1210, 0x1210,  1},  // ሐ HHA
    {0x1211, 0x1210,  2},  // ሑ HHU
    {0x1212, 0x1210,  3},  // ሒ HHI
    {0x1213, 0x1210,  4},  // ሓ HHAA
    {0x1214, 0x1210,  5},  // ሔ HHEE
    {0x1215, 0x1210,  6},  // ሕ HHE
    {0x1216, 0x1210,  7},  // ሖ HHO
    {0x1217, 0x1210,  8},  // ሗ HHWA
    {0x1218, 0x1218,  1},  // መ MA
    {0x1219, 0x1218,  2},  // ሙ MU
    {0x121A, 0x1218,  3},  // ሚ MI
    {0x121B, 0x1218,  4},  // ማ MAA
    {0x121C, 0x1218,  5},  // ሜ MEE
    {0x121D, 0x1218,  6},  // ም ME
    {0x121E, 0x1218,  7},  // ሞ MO
    {0x121F, 0x1218,  8},  // ሟ MWA
    {0x1220, 0x1220,  1},  // ሠ SZA
    {0x1221, 0x1220,  2},  // ሡ SZU
    {0x1222, 0x1220,  3},  // ሢ SZI
    {0x1223, 0x1220,  4},  // ሣ SZAA
    {0x1224, 0x1220,  5},  // ሤ SZEE
    {0x1225, 0x1220,  6},  // ሥ SZE
    {0x1226, 0x1220,  7},  // ሦ SZO
    {0x1227, 0x1220,  8},  // ሧ SZWA
    {0x1228, 0x1228,  1},  // ረ RA
    {0x1229, 0x1228,  2},  // ሩ RU
    {0x122A, 0x1228,  3},  // ሪ RI
    {0x122B, 0x1228,  4},  // ራ RAA
    {0x122C, 0x1228,  5},  // ሬ REE
    {0x122D, 0x1228,  6},  // ር RE
    {0x122E, 0x1228,  7},  // ሮ RO
    {0x122F, 0x1228,  8},  // ሯ RWA
    {0x1230, 0x1230,  1},  // ሰ SA
    {0x1231, 0x1230,  2},  // ሱ SU
    {0x1232, 0x1230,  3},  // ሲ SI
    {0x1233, 0x1230,  4},  // ሳ SAA
    {0x1234, 0x1230,  5},  // ሴ SEE
    {0x1235, 0x1230,  6},  // ስ SE
    {0x1236, 0x1230,  7},  // ሶ SO
    {0x1237, 0x1230,  8},  // ሷ SWA
    {0x1238, 0x1238,  1},  // ሸ SHA
    {0x1239, 0x1238,  2},  // ሹ SHU
    {0x123A, 0x1238,  3},  // ሺ SHI
    {0x123B, 0x1238,  4},  // ሻ SHAA
    {0x123C, 0x1238,  5},  // ሼ SHEE
    {0x123D, 0x1238,  6},  // ሽ SHE
    {0x123E, 0x1238,  7},  // ሾ SHO
    {0x123F, 0x1238,  8},  // ሿ SHWA
    {0x1240, 0x1240,  1},  // ቀ QA
    {0x1241, 0x1240,  2},  // ቁ QU
    {0x1242, 0x1240,  3},  // ቂ QI
    {0x1243, 0x1240,  4},  // ቃ QAA
    {0x1244, 0x1240,  5},  // ቄ QEE
    {0x1245, 0x1240,  6},  // ቅ QE
    {0x1246, 0x1240,  7},  // ቆ QO
    {0x1247, 0x1240,  8},  // ቇ QOA
    {0x1248, 0x1248,  9},  // ቈ QWA
    {0x124A, 0x1248, 10},  // ቊ QWI
    {0x124B, 0x1248, 11},  // ቋ QWAA
    {0x124C, 0x1248, 12},  // ቌ QWEE
    {0x124D, 0x1248, 13},  // ቍ QWE
    {0x1250, 0x1250,  1},  // ቐ QHA
    {0x1251, 0x1250,  2},  // ቑ QHU
    {0x1252, 0x1250,  3},  // ቒ QHI
    {0x1253, 0x1250,  4},  // ቓ QHAA
    {0x1254, 0x1250,  5},  // ቔ QHEE
    {0x1255, 0x1250,  6},  // ቕ QHE
    {0x1256, 0x1250,  7},  // ቖ QHO
    {0x1258, 0x1258,  9},  // ቘ QHWA
    {0x125A, 0x1258, 10},  // ቚ QHWI
    {0x125B, 0x1258, 11},  // ቛ QHWAA
    {0x125C, 0x1258, 12},  // ቜ QHWEE
    {0x125D, 0x1258, 13},  // ቝ QHWE
    {0x1260, 0x1260,  1},  // በ BA
    {0x1261, 0x1260,  2},  // ቡ BU
    {0x1262, 0x1260,  3},  // ቢ BI
    {0x1263, 0x1260,  4},  // ባ BAA
    {0x1264, 0x1260,  5},  // ቤ BEE
    {0x1265, 0x1260,  6},  // ብ BE
    {0x1266, 0x1260,  7},  // ቦ BO
    {0x1267, 0x1260,  8},  // ቧ BWA
    {0x1268, 0x1268,  1},  // ቨ VA
    {0x1269, 0x1268,  2},  // ቩ VU
    {0x126A, 0x1268,  3},  // ቪ VI
    {0x126B, 0x1268,  4},  // ቫ VAA
    {0x126C, 0x1268,  5},  // ቬ VEE
    {0x126D, 0x1268,  6},  // ቭ VE
    {0x126E, 0x1268,  7},  // ቮ VO
    {0x126F, 0x1268,  8},  // ቯ VWA
    {0x1270, 0x1270,  1},  // ተ TA
    {0x1271, 0x1270,  2},  // ቱ TU
    {0x1272, 0x1270,  3},  // ቲ TI
    {0x1273, 0x1270,  4},  // ታ TAA
    {0x1274, 0x1270,  5},  // ቴ TEE
    {0x1275, 0x1270,  6},  // ት TE
    {0x1276, 0x1270,  7},  // ቶ TO
    {0x1277, 0x1270,  8},  // ቷ TWA
    {0x1278, 0x1278,  1},  // ቸ CA
    {0x1279, 0x1278,  2},  // ቹ CU
    {0x127A, 0x1278,  3},  // ቺ CI
    {0x127B, 0x1278,  4},  // ቻ CAA
    {0x127C, 0x1278,  5},  // ቼ CEE
    {0x127D, 0x1278,  6},  // ች CE
    {0x127E, 0x1278,  7},  // ቾ CO
    {0x127F, 0x1278,  8},  // ቿ CWA
    {0x1280, 0x1280,  1},  // ኀ XA
    {0x1281, 0x1280,  2},  // ኁ XU
    {0x1282, 0x1280,  3},  // ኂ XI
    {0x1283, 0x1280,  4},  // ኃ XAA
    {0x1284, 0x1280,  5},  // ኄ XEE
    {0x1285, 0x1280,  6},  // ኅ XE
    {0x1286, 0x1280,  7},  // ኆ XO
    {0x1287, 0x1280,  8},  // ኇ XOA
    {0x1288, 0x1288,  9},  // ኈ XWA
    {0x128A, 0x1288, 10},  // ኊ XWI
    {0x128B, 0x1288, 11},  // ኋ XWAA
    {0x128C, 0x1288, 12},  // ኌ XWEE
    {0x128D, 0x1288, 13},  // ኍ XWE
    {0x1290, 0x1290,  1},  // ነ NA
    {0x1291, 0x1290,  2},  // ኑ NU
    {0x1292, 0x1290,  3},  // ኒ NI
    {0x1293, 0x1290,  4},  // ና NAA
    {0x1294, 0x1290,  5},  // ኔ NEE
    {0x1295, 0x1290,  6},  // ን NE
    {0x1296, 0x1290,  7},  // ኖ NO
    {0x1297, 0x1290,  8},  // ኗ NWA
    {0x1298, 0x1298,  1},  // ኘ NYA
    {0x1299, 0x1298,  2},  // ኙ NYU
    {0x129A, 0x1298,  3},  // ኚ NYI
    {0x129B, 0x1298,  4},  // ኛ NYAA
    {0x129C, 0x1298,  5},  // ኜ NYEE
    {0x129D, 0x1298,  6},  // ኝ NYE
    {0x129E, 0x1298,  7},  // ኞ NYO
    {0x129F, 0x1298,  8},  // ኟ NYWA
    {0x12A0, 0x12A0,  1},  // አ GLOTTAL A
    {0x12A1, 0x12A0,  2},  // ኡ GLOTTAL U
    {0x12A2, 0x12A0,  3},  // ኢ GLOTTAL I
    {0x12A3, 0x12A0,  4},  // ኣ GLOTTAL AA
    {0x12A4, 0x12A0,  5},  // ኤ GLOTTAL EE
    {0x12A5, 0x12A0,  6},  // እ GLOTTAL E
    {0x12A6, 0x12A0,  7},  // ኦ GLOTTAL O
    {0x12A7, 0x12A0,  8},  // ኧ GLOTTAL WA
    {0x12A8, 0x12A8,  1},  // ከ KA
    {0x12A9, 0x12A8,  2},  // ኩ KU
    {0x12AA, 0x12A8,  3},  // ኪ KI
    {0x12AB, 0x12A8,  4},  // ካ KAA
    {0x12AC, 0x12A8,  5},  // ኬ KEE
    {0x12AD, 0x12A8,  6},  // ክ KE
    {0x12AE, 0x12A8,  7},  // ኮ KO
    {0x12AF, 0x12A8,  8},  // ኯ KOA
    {0x12B0, 0x12B0,  9},  // ኰ KWA
    {0x12B2, 0x12B0, 10},  // ኲ KWI
    {0x12B3, 0x12B0, 11},  // ኳ KWAA
    {0x12B4, 0x12B0, 12},  // ኴ KWEE
    {0x12B5, 0x12B0, 13},  // ኵ KWE
    {0x12B8, 0x12B8,  1},  // ኸ KXA
    {0x12B9, 0x12B8,  2},  // ኹ KXU
    {0x12BA, 0x12B8,  3},  // ኺ KXI
    {0x12BB, 0x12B8,  4},  // ኻ KXAA
    {0x12BC, 0x12B8,  5},  // ኼ KXEE
    {0x12BD, 0x12B8,  6},  // ኽ KXE
    {0x12BE, 0x12B8,  7},  // ኾ KXO
    {0x12C0, 0x12C0,  9},  // ዀ KXWA
    {0x12C2, 0x12C0, 10},  // ዂ KXWI
    {0x12C3, 0x12C0, 11},  // ዃ KXWAA
    {0x12C4, 0x12C0, 12},  // ዄ KXWEE
    {0x12C5, 0x12C0, 13},  // ዅ KXWE
    {0x12C8, 0x12C8,  1},  // ወ WA
    {0x12C9, 0x12C8,  2},  // ዉ WU
    {0x12CA, 0x12C8,  3},  // ዊ WI
    {0x12CB, 0x12C8,  4},  // ዋ WAA
    {0x12CC, 0x12C8,  5},  // ዌ WEE
    {0x12CD, 0x12C8,  6},  // ው WE
    {0x12CE, 0x12C8,  7},  // ዎ WO
    {0x12CF, 0x12C8,  8},  // ዏ WOA
    {0x12D0, 0x12D0,  1},  // ዐ PHARYNGEAL A
    {0x12D1, 0x12D0,  2},  // ዑ PHARYNGEAL U
    {0x12D2, 0x12D0,  3},  // ዒ PHARYNGEAL I
    {0x12D3, 0x12D0,  4},  // ዓ PHARYNGEAL AA
    {0x12D4, 0x12D0,  5},  // ዔ PHARYNGEAL EE
    {0x12D5, 0x12D0,  6},  // ዕ PHARYNGEAL E
    {0x12D6, 0x12D0,  7},  // ዖ PHARYNGEAL O
    {0x12D8, 0x12D8,  1},  // ዘ ZA
    {0x12D9, 0x12D8,  2},  // ዙ ZU
    {0x12DA, 0x12D8,  3},  // ዚ ZI
    {0x12DB, 0x12D8,  4},  // ዛ ZAA
    {0x12DC, 0x12D8,  5},  // ዜ ZEE
    {0x12DD, 0x12D8,  6},  // ዝ ZE
    {0x12DE, 0x12D8,  7},  // ዞ ZO
    {0x12DF, 0x12D8,  8},  // ዟ ZWA
    {0x12E0, 0x12E0,  1},  // ዠ ZHA
    {0x12E1, 0x12E0,  2},  // ዡ ZHU
    {0x12E2, 0x12E0,  3},  // ዢ ZHI
    {0x12E3, 0x12E0,  4},  // ዣ ZHAA
    {0x12E4, 0x12E0,  5},  // ዤ ZHEE
    {0x12E5, 0x12E0,  6},  // ዥ ZHE
    {0x12E6, 0x12E0,  7},  // ዦ ZHO
    {0x12E7, 0x12E0,  8},  // ዧ ZHWA
    {0x12E8, 0x12E8,  1},  // የ YA
    {0x12E9, 0x12E8,  2},  // ዩ YU
    {0x12EA, 0x12E8,  3},  // ዪ YI
    {0x12EB, 0x12E8,  4},  // ያ YAA
    {0x12EC, 0x12E8,  5},  // ዬ YEE
    {0x12ED, 0x12E8,  6},  // ይ YE
    {0x12EE, 0x12E8,  7},  // ዮ YO
    {0x12EF, 0x12E8,  8},  // ዯ YOA
    {0x12F0, 0x12F0,  1},  // ደ DA
    {0x12F1, 0x12F0,  2},  // ዱ DU
    {0x12F2, 0x12F0,  3},  // ዲ DI
    {0x12F3, 0x12F0,  4},  // ዳ DAA
    {0x12F4, 0x12F0,  5},  // ዴ DEE
    {0x12F5, 0x12F0,  6},  // ድ DE
    {0x12F6, 0x12F0,  7},  // ዶ DO
    {0x12F7, 0x12F0,  8},  // ዷ DWA
    {0x12F8, 0x12F8,  1},  // ዸ DDA
    {0x12F9, 0x12F8,  2},  // ዹ DDU
    {0x12FA, 0x12F8,  3},  // ዺ DDI
    {0x12FB, 0x12F8,  4},  // ዻ DDAA
    {0x12FC, 0x12F8,  5},  // ዼ DDEE
    {0x12FD, 0x12F8,  6},  // ዽ DDE
    {0x12FE, 0x12F8,  7},  // ዾ DDO
    {0x12FF, 0x12F8,  8},  // ዿ DDWA
    {0x1300, 0x1300,  1},  // ጀ JA
    {0x1301, 0x1300,  2},  // ጁ JU
    {0x1302, 0x1300,  3},  // ጂ JI
    {0x1303, 0x1300,  4},  // ጃ JAA
    {0x1304, 0x1300,  5},  // ጄ JEE
    {0x1305, 0x1300,  6},  // ጅ JE
    {0x1306, 0x1300,  7},  // ጆ JO
    {0x1307, 0x1300,  8},  // ጇ JWA
    {0x1308, 0x1308,  1},  // ገ GA
    {0x1309, 0x1308,  2},  // ጉ GU
    {0x130A, 0x1308,  3},  // ጊ GI
    {0x130B, 0x1308,  4},  // ጋ GAA
    {0x130C, 0x1308,  5},  // ጌ GEE
    {0x130D, 0x1308,  6},  // ግ GE
    {0x130E, 0x1308,  7},  // ጎ GO
    {0x130F, 0x1308,  8},  // ጏ GOA
    {0x1310, 0x1310,  9},  // ጐ GWA
    {0x1312, 0x1310, 10},  // ጒ GWI
    {0x1313, 0x1310, 11},  // ጓ GWAA
    {0x1314, 0x1310, 12},  // ጔ GWEE
    {0x1315, 0x1310, 13},  // ጕ GWE
    {0x1318, 0x1318,  1},  // ጘ GGA
    {0x1319, 0x1318,  2},  // ጙ GGU
    {0x131A, 0x1318,  3},  // ጚ GGI
    {0x131B, 0x1318,  4},  // ጛ GGAA
    {0x131C, 0x1318,  5},  // ጜ GGEE
    {0x131D, 0x1318,  6},  // ጝ GGE
    {0x131E, 0x1318,  7},  // ጞ GGO
    {0x131F, 0x1318,  8},  // ጟ GGWAA
    {0x1320, 0x1320,  1},  // ጠ THA
    {0x1321, 0x1320,  2},  // ጡ THU
    {0x1322, 0x1320,  3},  // ጢ THI
    {0x1323, 0x1320,  4},  // ጣ THAA
    {0x1324, 0x1320,  5},  // ጤ THEE
    {0x1325, 0x1320,  6},  // ጥ THE
    {0x1326, 0x1320,  7},  // ጦ THO
    {0x1327, 0x1320,  8},  // ጧ THWA
    {0x1328, 0x1328,  1},  // ጨ CHA
    {0x1329, 0x1328,  2},  // ጩ CHU
    {0x132A, 0x1328,  3},  // ጪ CHI
    {0x132B, 0x1328,  4},  // ጫ CHAA
    {0x132C, 0x1328,  5},  // ጬ CHEE
    {0x132D, 0x1328,  6},  // ጭ CHE
    {0x132E, 0x1328,  7},  // ጮ CHO
    {0x132F, 0x1328,  8},  // ጯ CHWA
    {0x1330, 0x1330,  1},  // ጰ PHA
    {0x1331, 0x1330,  2},  // ጱ PHU
    {0x1332, 0x1330,  3},  // ጲ PHI
    {0x1333, 0x1330,  4},  // ጳ PHAA
    {0x1334, 0x1330,  5},  // ጴ PHEE
    {0x1335, 0x1330,  6},  // ጵ PHE
    {0x1336, 0x1330,  7},  // ጶ PHO
    {0x1337, 0x1330,  8},  // ጷ PHWA
    {0x1338, 0x1338,  1},  // ጸ TSA
    {0x1339, 0x1338,  2},  // ጹ TSU
    {0x133A, 0x1338,  3},  // ጺ TSI
    {0x133B, 0x1338,  4},  // ጻ TSAA
    {0x133C, 0x1338,  5},  // ጼ TSEE
    {0x133D, 0x1338,  6},  // ጽ TSE
    {0x133E, 0x1338,  7},  // ጾ TSO
    {0x133F, 0x1338,  8},  // ጿ TSWA
    {0x1340, 0x1340,  1},  // ፀ TZA
    {0x1341, 0x1340,  2},  // ፁ TZU
    {0x1342, 0x1340,  3},  // ፂ TZI
    {0x1343, 0x1340,  4},  // ፃ TZAA
    {0x1344, 0x1340,  5},  // ፄ TZEE
    {0x1345, 0x1340,  6},  // ፅ TZE
    {0x1346, 0x1340,  7},  // ፆ TZO
    {0x1347, 0x1340,  8},  // ፇ TZOA
    {0x1348, 0x1348,  1},  // ፈ FA
    {0x1349, 0x1348,  2},  // ፉ FU
    {0x134A, 0x1348,  3},  // ፊ FI
    {0x134B, 0x1348,  4},  // ፋ FAA
    {0x134C, 0x1348,  5},  // ፌ FEE
    {0x134D, 0x1348,  6},  // ፍ FE
    {0x134E, 0x1348,  7},  // ፎ FO
    {0x134F, 0x1348,  8},  // ፏ FWA
    {0x1350, 0x1350,  1},  // ፐ PA
    {0x1351, 0x1350,  2},  // ፑ PU
    {0x1352, 0x1350,  3},  // ፒ PI
    {0x1353, 0x1350,  4},  // ፓ PAA
    {0x1354, 0x1350,  5},  // ፔ PEE
    {0x1355, 0x1350,  6},  // ፕ PE
    {0x1356, 0x1350,  7},  // ፖ PO
    {0x1357, 0x1350,  8},  // ፗ PWA
    {0x1358, 0x1228, 14},  // ፘ RYA
    {0x1359, 0x1218, 14},  // ፙ MYA
    {0x135A, 0x1348, 14},  // ፚ FYA
}};

}  // namespace ametaphone::detail
