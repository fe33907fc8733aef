"""Shared builders for the triangle-staircase blow-down replays."""

from sfiber.plumbing import PlumbingGraph, SurfaceClass, blow_down


def cf_two_led(n_seq):
    """Rebuild [2 x (n1+1), n2, 2 x n3, n4, ...] from run-length data."""
    cf = [2] * (n_seq[0] + 1)
    for idx in range(1, len(n_seq)):
        if idx % 2 == 1:
            cf.append(n_seq[idx])
        else:
            cf.extend([2] * n_seq[idx])
    return tuple(cf)


def cf_single_led(m_seq):
    """Rebuild [m1, 2 x m2, m3, ...] from run-length data."""
    cf = []
    for idx, value in enumerate(m_seq):
        if idx % 2 == 0:
            cf.append(value)
        else:
            cf.extend([2] * value)
    return tuple(cf)


def staircase_graph(n_seq, m_seq, d):
    """Star with a (-1) center and the three legs the route iterates on.

    Returns (graph, top, m_ids, n_ids): blowing the center produces the
    triangle configuration whose top vertex has weight -d+1.
    """
    vertices = {0: SurfaceClass(-1, 0), 1: SurfaceClass(-d, 0)}
    edges = {(0, 1): 1}
    next_id = 2
    m_ids, n_ids = [], []
    for cf, ids in ((cf_single_led(m_seq), m_ids), (cf_two_led(n_seq), n_ids)):
        prev = 0
        for coeff in cf:
            vertices[next_id] = SurfaceClass(-coeff, 0)
            edges[(prev, next_id) if prev < next_id else (next_id, prev)] = 1
            ids.append(next_id)
            prev = next_id
            next_id += 1
    return PlumbingGraph(vertices, edges), 1, m_ids, n_ids


def replay_blowdowns(n_seq, m_seq, d, stages):
    """Blow the staircase down through the given number of stage transitions.

    Stage transition i blows n_{i+1}+1 vertices of the two-led leg when i
    is even and m_{i+1}+1 vertices of the single-led leg when i is odd.
    Returns (graphs, top, m_ids, n_ids, pointers): graphs[k] is the
    configuration after k transitions (graphs[0] the initial triangle) and
    pointers[k] = (m_ptr, n_ptr) indexes the leg heads surviving in it.
    """
    graph, top, m_ids, n_ids = staircase_graph(n_seq, m_seq, d)
    graph = blow_down(graph, 0)
    graphs = [graph]
    m_ptr = n_ptr = 0
    pointers = [(m_ptr, n_ptr)]
    for i in range(stages):
        if i % 2 == 0:
            count = n_seq[i] + 1
            ids, n_ptr = n_ids[n_ptr:n_ptr + count], n_ptr + count
        else:
            count = m_seq[i] + 1
            ids, m_ptr = m_ids[m_ptr:m_ptr + count], m_ptr + count
        for v in ids:
            graph = blow_down(graph, v)
        graphs.append(graph)
        pointers.append((m_ptr, n_ptr))
    return graphs, top, m_ids, n_ids, pointers
