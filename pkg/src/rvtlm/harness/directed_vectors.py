"""Frozen operand/result vectors for the directed suite.

Generated by scripts/freeze_directed_vectors.py from an independent reference
interpreter; do not edit by hand. Tuples are (a, b_or_imm_or_offset, expected).
"""

DATA = [9833440827789222417, 17357102489901502592, 9223372034707292160, 4294934529]

VECTORS = {'add': [(5, 3, 8), (3, 5, 8), (18446744073709551615, 1, 0),
         (9223372036854775808, 18446744073709551615, 9223372036854775807),
         (9223372036854775808, 1, 9223372036854775809),
         (9223372036854775807, 9223372036854775807, 18446744073709551614),
         (1311768467463790320, 1147797409030816545, 2459565876494606865),
         (4294967295, 2147483648, 6442450943), (2147483648, 4294967295, 6442450943), (12345, 0, 12345),
         (18446744073709551516, 7, 18446744073709551523), (3735928559, 18446744073709551516, 3735928459)],
 'addi': [(0, 0, 0), (0, 1, 1), (0, -1, 18446744073709551615), (5, 0, 5), (5, 1, 6), (5, -1, 4),
          (18446744073709551615, 0, 18446744073709551615), (18446744073709551615, 1, 0),
          (18446744073709551615, -1, 18446744073709551614), (9223372036854775808, 0, 9223372036854775808),
          (9223372036854775808, 1, 9223372036854775809), (9223372036854775808, -1, 9223372036854775807),
          (2147483647, 0, 2147483647), (2147483647, 1, 2147483648), (2147483647, -1, 2147483646),
          (18446744071562067968, 0, 18446744071562067968), (18446744071562067968, 1, 18446744071562067969),
          (18446744071562067968, -1, 18446744071562067967), (1311768467463790320, 0, 1311768467463790320),
          (1311768467463790320, 1, 1311768467463790321), (1311768467463790320, -1, 1311768467463790319),
          (0, 2047, 2047), (5, -2048, 18446744073709549573), (18446744073709551615, 1365, 1364),
          (9223372036854775808, -683, 9223372036854775125)],
 'addiw': [(0, 0, 0), (0, 1, 1), (0, -1, 18446744073709551615), (5, 0, 5), (5, 1, 6), (5, -1, 4),
           (18446744073709551615, 0, 18446744073709551615), (18446744073709551615, 1, 0),
           (18446744073709551615, -1, 18446744073709551614), (9223372036854775808, 0, 0),
           (9223372036854775808, 1, 1), (9223372036854775808, -1, 18446744073709551615),
           (2147483647, 0, 2147483647), (2147483647, 1, 18446744071562067968), (2147483647, -1, 2147483646),
           (18446744071562067968, 0, 18446744071562067968), (18446744071562067968, 1, 18446744071562067969),
           (18446744071562067968, -1, 2147483647), (1311768467463790320, 0, 18446744072010653424),
           (1311768467463790320, 1, 18446744072010653425), (1311768467463790320, -1, 18446744072010653423),
           (0, 2047, 2047), (5, -2048, 18446744073709549573), (18446744073709551615, 1365, 1364),
           (9223372036854775808, -683, 18446744073709550933)],
 'addw': [(5, 3, 8), (3, 5, 8), (18446744073709551615, 1, 0),
          (9223372036854775808, 18446744073709551615, 18446744073709551615), (9223372036854775808, 1, 1),
          (9223372036854775807, 9223372036854775807, 18446744073709551614),
          (1311768467463790320, 1147797409030816545, 572662289), (4294967295, 2147483648, 2147483647),
          (2147483648, 4294967295, 2147483647), (12345, 0, 12345),
          (18446744073709551516, 7, 18446744073709551523),
          (3735928559, 18446744073709551516, 18446744073150512779)],
 'and': [(5, 3, 1), (3, 5, 1), (18446744073709551615, 1, 1),
         (9223372036854775808, 18446744073709551615, 9223372036854775808), (9223372036854775808, 1, 0),
         (9223372036854775807, 9223372036854775807, 9223372036854775807),
         (1311768467463790320, 1147797409030816545, 154321028986978848), (4294967295, 2147483648, 2147483648),
         (2147483648, 4294967295, 2147483648), (12345, 0, 0), (18446744073709551516, 7, 4),
         (3735928559, 18446744073709551516, 3735928460)],
 'andi': [(0, 0, 0), (0, 1, 0), (0, -1, 0), (5, 0, 0), (5, 1, 1), (5, -1, 5), (18446744073709551615, 0, 0),
          (18446744073709551615, 1, 1), (18446744073709551615, -1, 18446744073709551615),
          (9223372036854775808, 0, 0), (9223372036854775808, 1, 0),
          (9223372036854775808, -1, 9223372036854775808), (2147483647, 0, 0), (2147483647, 1, 1),
          (2147483647, -1, 2147483647), (18446744071562067968, 0, 0), (18446744071562067968, 1, 0),
          (18446744071562067968, -1, 18446744071562067968), (1311768467463790320, 0, 0),
          (1311768467463790320, 1, 0), (1311768467463790320, -1, 1311768467463790320), (0, 2047, 0),
          (5, -2048, 0), (18446744073709551615, 1365, 1365),
          (9223372036854775808, -683, 9223372036854775808)],
 'beq': [(0, 0, 1), (1, 2, 0), (2, 1, 0), (18446744073709551615, 1, 0), (1, 18446744073709551615, 0),
         (9223372036854775808, 9223372036854775807, 0), (18446744073709551615, 18446744073709551615, 1)],
 'bge': [(0, 0, 1), (1, 2, 0), (2, 1, 1), (18446744073709551615, 1, 0), (1, 18446744073709551615, 1),
         (9223372036854775808, 9223372036854775807, 0), (18446744073709551615, 18446744073709551615, 1)],
 'bgeu': [(0, 0, 1), (1, 2, 0), (2, 1, 1), (18446744073709551615, 1, 1), (1, 18446744073709551615, 0),
          (9223372036854775808, 9223372036854775807, 1), (18446744073709551615, 18446744073709551615, 1)],
 'blt': [(0, 0, 0), (1, 2, 1), (2, 1, 0), (18446744073709551615, 1, 1), (1, 18446744073709551615, 0),
         (9223372036854775808, 9223372036854775807, 1), (18446744073709551615, 18446744073709551615, 0)],
 'bltu': [(0, 0, 0), (1, 2, 1), (2, 1, 0), (18446744073709551615, 1, 0), (1, 18446744073709551615, 1),
          (9223372036854775808, 9223372036854775807, 0), (18446744073709551615, 18446744073709551615, 0)],
 'bne': [(0, 0, 0), (1, 2, 1), (2, 1, 1), (18446744073709551615, 1, 1), (1, 18446744073709551615, 1),
         (9223372036854775808, 9223372036854775807, 1), (18446744073709551615, 18446744073709551615, 0)],
 'div': [(5, 3, 1), (3, 5, 0), (18446744073709551615, 1, 18446744073709551615),
         (9223372036854775808, 18446744073709551615, 9223372036854775808),
         (9223372036854775808, 1, 9223372036854775808), (9223372036854775807, 9223372036854775807, 1),
         (1311768467463790320, 1147797409030816545, 1), (4294967295, 2147483648, 1),
         (2147483648, 4294967295, 0), (12345, 0, 18446744073709551615),
         (18446744073709551516, 7, 18446744073709551602),
         (3735928559, 18446744073709551516, 18446744073672192331)],
 'divu': [(5, 3, 1), (3, 5, 0), (18446744073709551615, 1, 18446744073709551615),
          (9223372036854775808, 18446744073709551615, 0), (9223372036854775808, 1, 9223372036854775808),
          (9223372036854775807, 9223372036854775807, 1), (1311768467463790320, 1147797409030816545, 1),
          (4294967295, 2147483648, 1), (2147483648, 4294967295, 0), (12345, 0, 18446744073709551615),
          (18446744073709551516, 7, 2635249153387078788), (3735928559, 18446744073709551516, 0)],
 'divuw': [(5, 3, 1), (3, 5, 0), (18446744073709551615, 1, 18446744073709551615),
           (9223372036854775808, 18446744073709551615, 0), (9223372036854775808, 1, 0),
           (9223372036854775807, 9223372036854775807, 1), (1311768467463790320, 1147797409030816545, 1),
           (4294967295, 2147483648, 1), (2147483648, 4294967295, 0), (12345, 0, 18446744073709551615),
           (18446744073709551516, 7, 613566742), (3735928559, 18446744073709551516, 0)],
 'divw': [(5, 3, 1), (3, 5, 0), (18446744073709551615, 1, 18446744073709551615),
          (9223372036854775808, 18446744073709551615, 0), (9223372036854775808, 1, 0),
          (9223372036854775807, 9223372036854775807, 1), (1311768467463790320, 1147797409030816545, 0),
          (4294967295, 2147483648, 0), (2147483648, 4294967295, 18446744071562067968),
          (12345, 0, 18446744073709551615), (18446744073709551516, 7, 18446744073709551602),
          (3735928559, 18446744073709551516, 5590387)],
 'lb': [(0, 0, 17), (1, 0, 34), (8, 0, 18446744073709551488), (15, 0, 18446744073709551600), (31, 0, 0)],
 'lbu': [(0, 0, 17), (1, 0, 34), (8, 0, 128), (15, 0, 240), (31, 0, 0)],
 'ld': [(0, 0, 9833440827789222417), (8, 0, 17357102489901502592), (24, 0, 4294934529)],
 'lh': [(0, 0, 8721), (2, 0, 17459), (8, 0, 18446744073709523072), (14, 0, 18446744073709547744), (30, 0, 0)],
 'lhu': [(0, 0, 8721), (2, 0, 17459), (8, 0, 36992), (14, 0, 61664), (30, 0, 0)],
 'lui': [(0, 0, 0), (1, 0, 4096), (524287, 0, 2147479552), (524288, 0, 18446744071562067968),
         (1048575, 0, 18446744073709547520), (74565, 0, 305418240)],
 'lw': [(0, 0, 1144201745), (4, 0, 18446744071704110677), (8, 0, 18446744072377897088),
        (12, 0, 18446744073455849664), (28, 0, 0)],
 'lwu': [(0, 0, 1144201745), (4, 0, 2289526357), (8, 0, 2963312768), (12, 0, 4041265344), (28, 0, 0)],
 'mul': [(5, 3, 15), (3, 5, 15), (18446744073709551615, 1, 18446744073709551615),
         (9223372036854775808, 18446744073709551615, 9223372036854775808),
         (9223372036854775808, 1, 9223372036854775808), (9223372036854775807, 9223372036854775807, 1),
         (1311768467463790320, 1147797409030816545, 2465395958572223728),
         (4294967295, 2147483648, 9223372034707292160), (2147483648, 4294967295, 9223372034707292160),
         (12345, 0, 0), (18446744073709551516, 7, 18446744073709550916),
         (3735928559, 18446744073709551516, 18446743700116695716)],
 'mulh': [(5, 3, 0), (3, 5, 0), (18446744073709551615, 1, 18446744073709551615),
          (9223372036854775808, 18446744073709551615, 0), (9223372036854775808, 1, 18446744073709551615),
          (9223372036854775807, 9223372036854775807, 4611686018427387903),
          (1311768467463790320, 1147797409030816545, 81621149086635842), (4294967295, 2147483648, 0),
          (2147483648, 4294967295, 0), (12345, 0, 0), (18446744073709551516, 7, 18446744073709551615),
          (3735928559, 18446744073709551516, 18446744073709551615)],
 'mulhsu': [(5, 3, 0), (3, 5, 0), (18446744073709551615, 1, 18446744073709551615),
            (9223372036854775808, 18446744073709551615, 9223372036854775808),
            (9223372036854775808, 1, 18446744073709551615),
            (9223372036854775807, 9223372036854775807, 4611686018427387903),
            (1311768467463790320, 1147797409030816545, 81621149086635842), (4294967295, 2147483648, 0),
            (2147483648, 4294967295, 0), (12345, 0, 0), (18446744073709551516, 7, 18446744073709551615),
            (3735928559, 18446744073709551516, 3735928558)],
 'mulhu': [(5, 3, 0), (3, 5, 0), (18446744073709551615, 1, 0),
           (9223372036854775808, 18446744073709551615, 9223372036854775807), (9223372036854775808, 1, 0),
           (9223372036854775807, 9223372036854775807, 4611686018427387903),
           (1311768467463790320, 1147797409030816545, 81621149086635842), (4294967295, 2147483648, 0),
           (2147483648, 4294967295, 0), (12345, 0, 0), (18446744073709551516, 7, 6),
           (3735928559, 18446744073709551516, 3735928558)],
 'mulw': [(5, 3, 15), (3, 5, 15), (18446744073709551615, 1, 18446744073709551615),
          (9223372036854775808, 18446744073709551615, 0), (9223372036854775808, 1, 0),
          (9223372036854775807, 9223372036854775807, 1),
          (1311768467463790320, 1147797409030816545, 18446744073262959856),
          (4294967295, 2147483648, 18446744071562067968), (2147483648, 4294967295, 18446744071562067968),
          (12345, 0, 0), (18446744073709551516, 7, 18446744073709550916),
          (3735928559, 18446744073709551516, 69298852)],
 'or': [(5, 3, 7), (3, 5, 7), (18446744073709551615, 1, 18446744073709551615),
        (9223372036854775808, 18446744073709551615, 18446744073709551615),
        (9223372036854775808, 1, 9223372036854775809),
        (9223372036854775807, 9223372036854775807, 9223372036854775807),
        (1311768467463790320, 1147797409030816545, 2305244847507628017), (4294967295, 2147483648, 4294967295),
        (2147483648, 4294967295, 4294967295), (12345, 0, 12345),
        (18446744073709551516, 7, 18446744073709551519),
        (3735928559, 18446744073709551516, 18446744073709551615)],
 'ori': [(0, 0, 0), (0, 1, 1), (0, -1, 18446744073709551615), (5, 0, 5), (5, 1, 5),
         (5, -1, 18446744073709551615), (18446744073709551615, 0, 18446744073709551615),
         (18446744073709551615, 1, 18446744073709551615), (18446744073709551615, -1, 18446744073709551615),
         (9223372036854775808, 0, 9223372036854775808), (9223372036854775808, 1, 9223372036854775809),
         (9223372036854775808, -1, 18446744073709551615), (2147483647, 0, 2147483647),
         (2147483647, 1, 2147483647), (2147483647, -1, 18446744073709551615),
         (18446744071562067968, 0, 18446744071562067968), (18446744071562067968, 1, 18446744071562067969),
         (18446744071562067968, -1, 18446744073709551615), (1311768467463790320, 0, 1311768467463790320),
         (1311768467463790320, 1, 1311768467463790321), (1311768467463790320, -1, 18446744073709551615),
         (0, 2047, 2047), (5, -2048, 18446744073709549573),
         (18446744073709551615, 1365, 18446744073709551615),
         (9223372036854775808, -683, 18446744073709550933)],
 'rem': [(5, 3, 2), (3, 5, 3), (18446744073709551615, 1, 0), (9223372036854775808, 18446744073709551615, 0),
         (9223372036854775808, 1, 0), (9223372036854775807, 9223372036854775807, 0),
         (1311768467463790320, 1147797409030816545, 163971058432973775), (4294967295, 2147483648, 2147483647),
         (2147483648, 4294967295, 2147483648), (12345, 0, 12345),
         (18446744073709551516, 7, 18446744073709551614), (3735928559, 18446744073709551516, 59)],
 'remu': [(5, 3, 2), (3, 5, 3), (18446744073709551615, 1, 0),
          (9223372036854775808, 18446744073709551615, 9223372036854775808), (9223372036854775808, 1, 0),
          (9223372036854775807, 9223372036854775807, 0),
          (1311768467463790320, 1147797409030816545, 163971058432973775),
          (4294967295, 2147483648, 2147483647), (2147483648, 4294967295, 2147483648), (12345, 0, 12345),
          (18446744073709551516, 7, 0), (3735928559, 18446744073709551516, 3735928559)],
 'remuw': [(5, 3, 2), (3, 5, 3), (18446744073709551615, 1, 0), (9223372036854775808, 18446744073709551615, 0),
           (9223372036854775808, 1, 0), (9223372036854775807, 9223372036854775807, 0),
           (1311768467463790320, 1147797409030816545, 324508623), (4294967295, 2147483648, 2147483647),
           (2147483648, 4294967295, 18446744071562067968), (12345, 0, 12345), (18446744073709551516, 7, 2),
           (3735928559, 18446744073709551516, 18446744073150512879)],
 'remw': [(5, 3, 2), (3, 5, 3), (18446744073709551615, 1, 0), (9223372036854775808, 18446744073709551615, 0),
          (9223372036854775808, 1, 0), (9223372036854775807, 9223372036854775807, 0),
          (1311768467463790320, 1147797409030816545, 18446744072010653424),
          (4294967295, 2147483648, 18446744073709551615), (2147483648, 4294967295, 0), (12345, 0, 12345),
          (18446744073709551516, 7, 18446744073709551614),
          (3735928559, 18446744073709551516, 18446744073709551579)],
 'sb': [(11651590505119483672, 0, 9833440827789222424), (11651590505119483672, 1, 9833440827789219857),
        (11651590505119483672, 15, 1792662177709068416), (18446744073709551615, 0, 9833440827789222655),
        (18446744073709551615, 1, 9833440827789278993), (18446744073709551615, 15, 18437966400470421632),
        (128, 0, 9833440827789222528), (128, 1, 9833440827789246481), (128, 15, 9286651957653573760)],
 'sd': [(11651590505119483672, 0, 11651590505119483672), (11651590505119483672, 8, 11651590505119483672),
        (11651590505119483672, 8, 11651590505119483672), (18446744073709551615, 0, 18446744073709551615),
        (18446744073709551615, 8, 18446744073709551615), (18446744073709551615, 8, 18446744073709551615),
        (128, 0, 128), (128, 8, 128), (128, 8, 128)],
 'sh': [(11651590505119483672, 0, 9833440827789215512), (11651590505119483672, 2, 9833440826764042769),
        (11651590505119483672, 14, 511388083722162304), (18446744073709551615, 0, 9833440827789279231),
        (18446744073709551615, 2, 9833440830939931153), (18446744073709551615, 14, 18446692124748451968),
        (128, 0, 9833440827789213824), (128, 2, 9833440826653418001), (128, 14, 36258323034574976)],
 'sll': [(9223372036854775809, 0, 9223372036854775809), (9223372036854775809, 1, 2),
         (17361641477348724495, 31, 542551296159252480), (17361641477348724495, 32, 1085102592318504960),
         (9223372036854775809, 63, 9223372036854775808), (3221225472, 65, 6442450944),
         (1311768467015204864, 33, 0)],
 'slli': [(9223372036854775809, 0, 9223372036854775809), (9223372036854775809, 1, 2),
          (9223372036854775809, 32, 4294967296), (9223372036854775809, 63, 9223372036854775808),
          (17361641479496208143, 0, 17361641479496208143), (17361641479496208143, 1, 16276538885282864670),
          (17361641479496208143, 32, 10308474629173280768), (17361641479496208143, 63, 9223372036854775808)],
 'slliw': [(9223372036854775809, 0, 1), (9223372036854775809, 1, 2), (9223372036854775809, 16, 65536),
           (9223372036854775809, 31, 18446744071562067968), (17361641479496208143, 0, 18446744071814713103),
           (17361641479496208143, 1, 505290270), (17361641479496208143, 16, 252641280),
           (17361641479496208143, 31, 18446744071562067968)],
 'sllw': [(9223372036854775809, 0, 1), (9223372036854775809, 1, 2),
          (17361641477348724495, 31, 18446744071562067968), (17361641477348724495, 32, 252645135),
          (9223372036854775809, 63, 18446744071562067968), (3221225472, 65, 18446744071562067968),
          (1311768467015204864, 33, 0)],
 'slt': [(5, 3, 0), (3, 5, 1), (18446744073709551615, 1, 1), (9223372036854775808, 18446744073709551615, 1),
         (9223372036854775808, 1, 1), (9223372036854775807, 9223372036854775807, 0),
         (1311768467463790320, 1147797409030816545, 0), (4294967295, 2147483648, 0),
         (2147483648, 4294967295, 1), (12345, 0, 0), (18446744073709551516, 7, 1),
         (3735928559, 18446744073709551516, 0)],
 'slti': [(0, 0, 0), (0, 1, 1), (0, -1, 0), (5, 0, 0), (5, 1, 0), (5, -1, 0), (18446744073709551615, 0, 1),
          (18446744073709551615, 1, 1), (18446744073709551615, -1, 0), (9223372036854775808, 0, 1),
          (9223372036854775808, 1, 1), (9223372036854775808, -1, 1), (2147483647, 0, 0), (2147483647, 1, 0),
          (2147483647, -1, 0), (18446744071562067968, 0, 1), (18446744071562067968, 1, 1),
          (18446744071562067968, -1, 1), (1311768467463790320, 0, 0), (1311768467463790320, 1, 0),
          (1311768467463790320, -1, 0), (0, 2047, 1), (5, -2048, 0), (18446744073709551615, 1365, 1),
          (9223372036854775808, -683, 1)],
 'sltiu': [(0, 0, 0), (0, 1, 1), (0, -1, 1), (5, 0, 0), (5, 1, 0), (5, -1, 1), (18446744073709551615, 0, 0),
           (18446744073709551615, 1, 0), (18446744073709551615, -1, 0), (9223372036854775808, 0, 0),
           (9223372036854775808, 1, 0), (9223372036854775808, -1, 1), (2147483647, 0, 0), (2147483647, 1, 0),
           (2147483647, -1, 1), (18446744071562067968, 0, 0), (18446744071562067968, 1, 0),
           (18446744071562067968, -1, 1), (1311768467463790320, 0, 0), (1311768467463790320, 1, 0),
           (1311768467463790320, -1, 1), (0, 2047, 1), (5, -2048, 1), (18446744073709551615, 1365, 0),
           (9223372036854775808, -683, 1)],
 'sltu': [(5, 3, 0), (3, 5, 1), (18446744073709551615, 1, 0), (9223372036854775808, 18446744073709551615, 1),
          (9223372036854775808, 1, 0), (9223372036854775807, 9223372036854775807, 0),
          (1311768467463790320, 1147797409030816545, 0), (4294967295, 2147483648, 0),
          (2147483648, 4294967295, 1), (12345, 0, 0), (18446744073709551516, 7, 0),
          (3735928559, 18446744073709551516, 1)],
 'sra': [(9223372036854775809, 0, 9223372036854775809), (9223372036854775809, 1, 13835058055282163712),
         (17361641477348724495, 31, 18446744073204261344), (17361641477348724495, 32, 18446744073456906480),
         (9223372036854775809, 63, 18446744073709551615), (3221225472, 65, 1610612736),
         (1311768467015204864, 33, 152709948)],
 'srai': [(9223372036854775809, 0, 9223372036854775809), (9223372036854775809, 1, 13835058055282163712),
          (9223372036854775809, 32, 18446744071562067968), (9223372036854775809, 63, 18446744073709551615),
          (17361641479496208143, 0, 17361641479496208143), (17361641479496208143, 1, 17904192776602879879),
          (17361641479496208143, 32, 18446744073456906480),
          (17361641479496208143, 63, 18446744073709551615)],
 'sraiw': [(9223372036854775809, 0, 1), (9223372036854775809, 1, 0), (9223372036854775809, 16, 0),
           (9223372036854775809, 31, 0), (17361641479496208143, 0, 18446744071814713103),
           (17361641479496208143, 1, 18446744072762132359), (17361641479496208143, 16, 18446744073709522703),
           (17361641479496208143, 31, 18446744073709551615)],
 'sraw': [(9223372036854775809, 0, 1), (9223372036854775809, 1, 0), (17361641477348724495, 31, 0),
          (17361641477348724495, 32, 252645135), (9223372036854775809, 63, 0),
          (3221225472, 65, 18446744073172680704), (1311768467015204864, 33, 18446744072635809792)],
 'srl': [(9223372036854775809, 0, 9223372036854775809), (9223372036854775809, 1, 4611686018427387904),
         (17361641477348724495, 31, 8084644320), (17361641477348724495, 32, 4042322160),
         (9223372036854775809, 63, 1), (3221225472, 65, 1610612736), (1311768467015204864, 33, 152709948)],
 'srli': [(9223372036854775809, 0, 9223372036854775809), (9223372036854775809, 1, 4611686018427387904),
          (9223372036854775809, 32, 2147483648), (9223372036854775809, 63, 1),
          (17361641479496208143, 0, 17361641479496208143), (17361641479496208143, 1, 8680820739748104071),
          (17361641479496208143, 32, 4042322160), (17361641479496208143, 63, 1)],
 'srliw': [(9223372036854775809, 0, 1), (9223372036854775809, 1, 0), (9223372036854775809, 16, 0),
           (9223372036854775809, 31, 0), (17361641479496208143, 0, 18446744071814713103),
           (17361641479496208143, 1, 1200064391), (17361641479496208143, 16, 36623),
           (17361641479496208143, 31, 1)],
 'srlw': [(9223372036854775809, 0, 1), (9223372036854775809, 1, 0), (17361641477348724495, 31, 0),
          (17361641477348724495, 32, 252645135), (9223372036854775809, 63, 0), (3221225472, 65, 1610612736),
          (1311768467015204864, 33, 1073741824)],
 'sub': [(5, 3, 2), (3, 5, 18446744073709551614), (18446744073709551615, 1, 18446744073709551614),
         (9223372036854775808, 18446744073709551615, 9223372036854775809),
         (9223372036854775808, 1, 9223372036854775807), (9223372036854775807, 9223372036854775807, 0),
         (1311768467463790320, 1147797409030816545, 163971058432973775), (4294967295, 2147483648, 2147483647),
         (2147483648, 4294967295, 18446744071562067969), (12345, 0, 12345),
         (18446744073709551516, 7, 18446744073709551509), (3735928559, 18446744073709551516, 3735928659)],
 'subw': [(5, 3, 2), (3, 5, 18446744073709551614), (18446744073709551615, 1, 18446744073709551614),
          (9223372036854775808, 18446744073709551615, 1), (9223372036854775808, 1, 18446744073709551615),
          (9223372036854775807, 9223372036854775807, 0),
          (1311768467463790320, 1147797409030816545, 324508623), (4294967295, 2147483648, 2147483647),
          (2147483648, 4294967295, 18446744071562067969), (12345, 0, 12345),
          (18446744073709551516, 7, 18446744073709551509),
          (3735928559, 18446744073709551516, 18446744073150512979)],
 'sw': [(11651590505119483672, 0, 9833440830503126808), (11651590505119483672, 4, 16570439679761130001),
        (11651590505119483672, 12, 16570439681580241024), (18446744073709551615, 0, 9833440830939987967),
        (18446744073709551615, 4, 18446744070558786065), (18446744073709551615, 12, 18446744072377897088),
        (128, 0, 9833440826645020800), (128, 4, 550900015633), (128, 12, 552719126656)],
 'xor': [(5, 3, 6), (3, 5, 6), (18446744073709551615, 1, 18446744073709551614),
         (9223372036854775808, 18446744073709551615, 9223372036854775807),
         (9223372036854775808, 1, 9223372036854775809), (9223372036854775807, 9223372036854775807, 0),
         (1311768467463790320, 1147797409030816545, 2150923818520649169),
         (4294967295, 2147483648, 2147483647), (2147483648, 4294967295, 2147483647), (12345, 0, 12345),
         (18446744073709551516, 7, 18446744073709551515),
         (3735928559, 18446744073709551516, 18446744069973623155)],
 'xori': [(0, 0, 0), (0, 1, 1), (0, -1, 18446744073709551615), (5, 0, 5), (5, 1, 4),
          (5, -1, 18446744073709551610), (18446744073709551615, 0, 18446744073709551615),
          (18446744073709551615, 1, 18446744073709551614), (18446744073709551615, -1, 0),
          (9223372036854775808, 0, 9223372036854775808), (9223372036854775808, 1, 9223372036854775809),
          (9223372036854775808, -1, 9223372036854775807), (2147483647, 0, 2147483647),
          (2147483647, 1, 2147483646), (2147483647, -1, 18446744071562067968),
          (18446744071562067968, 0, 18446744071562067968), (18446744071562067968, 1, 18446744071562067969),
          (18446744071562067968, -1, 2147483647), (1311768467463790320, 0, 1311768467463790320),
          (1311768467463790320, 1, 1311768467463790321), (1311768467463790320, -1, 17134975606245761295),
          (0, 2047, 2047), (5, -2048, 18446744073709549573),
          (18446744073709551615, 1365, 18446744073709550250),
          (9223372036854775808, -683, 9223372036854775125)]}
