import unittest

from graphs.Enumerator import (
    EnumerationGuardError, degree_partitions, edge_range, enumerate_ribbon_graphs, involutions,
    vertex_rotation,
)


class TestEnumerationHelpers(unittest.TestCase):
    def test_degree_partitions(self):
        self.assertEqual(list(degree_partitions(6, 2)), [(3, 3)])
        self.assertEqual(list(degree_partitions(6, 1)), [(6,)])
        self.assertEqual(list(degree_partitions(8, 2)), [(5, 3), (4, 4)])
        self.assertEqual(list(degree_partitions(5, 2)), [])

    def test_involutions(self):
        self.assertEqual(len(list(involutions(4))), 3)
        self.assertEqual(len(list(involutions(6))), 15)
        for alpha in involutions(6):
            self.assertTrue(all(alpha[alpha[h]] == h and alpha[h] != h for h in range(6)))

    def test_vertex_rotation(self):
        self.assertEqual(vertex_rotation((3,)), (1, 2, 0))
        self.assertEqual(vertex_rotation((3, 3)), (1, 2, 0, 4, 5, 3))

    def test_edge_range(self):
        self.assertEqual(list(edge_range(0, 3)), [2, 3])
        self.assertEqual(list(edge_range(1, 2)), [3, 4, 5, 6])


class TestEnumerateRibbonGraphs(unittest.TestCase):
    def test_type_0_3(self):
        records = enumerate_ribbon_graphs(0, 3)
        self.assertEqual(len(records), 7)
        self.assertTrue(all(r.aut_order == 1 for r in records))
        self.assertEqual(sorted(r.num_edges for r in records), [2, 2, 2, 3, 3, 3, 3])

    def test_type_1_1(self):
        records = enumerate_ribbon_graphs(1, 1)
        self.assertEqual([(r.num_edges, r.aut_order) for r in records], [(2, 4), (3, 6)])
        self.assertEqual([r.matrix for r in records], [((2, 2),), ((2, 2, 2),)])

    def test_records_are_valid_graphs(self):
        for g, n in [(0, 3), (1, 1), (0, 4), (1, 2)]:
            for record in enumerate_ribbon_graphs(g, n):
                record.graph.validate(g, n)
                for col in range(record.num_edges):
                    self.assertEqual(sum(row[col] for row in record.matrix), 2)

    def test_guard(self):
        with self.assertRaises(EnumerationGuardError):
            enumerate_ribbon_graphs(2, 1)
        self.assertEqual(len(enumerate_ribbon_graphs(0, 3, guard_e=3)), 7)

    def test_worker_count_does_not_change_result(self):
        sequential = [r.dump() for r in enumerate_ribbon_graphs(1, 2, workers=1)]
        parallel = [r.dump() for r in enumerate_ribbon_graphs(1, 2, workers=4)]
        self.assertEqual(sequential, parallel)

    def test_dump_lines(self):
        for record in enumerate_ribbon_graphs(1, 1):
            line = record.dump()
            self.assertTrue(line.startswith(f"e={record.num_edges} sigma="))
            self.assertTrue(line.endswith(f"aut={record.aut_order}"))


if __name__ == '__main__':
    unittest.main()
