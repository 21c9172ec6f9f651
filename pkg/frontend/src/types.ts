// Wire types mirroring the service JSON payloads.

export type Pair = [number, number];

export interface BaseSpec {
    kind: "fountain" | "leapfrog" | "split";
    vertex?: number;
    center?: number;
    left?: number;
    right?: number;
}

export interface Classification {
    kind: "locally_finite" | "fountain" | "split_fountain";
    vertex?: number;
    left?: number;
    right?: number;
}

export interface SessionInfo {
    id: string;
    descriptor: unknown;
    classification: Classification;
    component_count: number;
    finite_component_empty?: boolean;
    bridge?: Pair;
    history_length: number;
    undo_depth: number;
    redo_depth: number;
}

export interface ArcInfo {
    arc: Pair;
    frozen: boolean;
    flippable: boolean;
}

export interface WindowSnapshot {
    a: number;
    b: number;
    arcs: ArcInfo[];
    sides: Pair[];
    classification: Classification;
    component_count: number;
    bridge?: Pair;
}

export interface RelationJson {
    lhs: Pair[];
    rhs: Pair[][];
    pretty: string;
}

export interface QRelation {
    qpow: [number, number];
    lhs: Pair[];
    rhs: Pair[][];
    certificate: { verified: boolean; quad: number[] };
}

export interface FlipResponse extends SessionInfo {
    new_arc: Pair;
    relation: RelationJson;
    q_relation?: QRelation;
}

export interface QuiverVertex {
    label: Pair;
    frozen: boolean;
}

export interface QuiverJson {
    vertices: QuiverVertex[];
    b: number[][];
}

export function pairKey(p: Pair): string {
    return `${p[0]},${p[1]}`;
}

export function parsePairKey(key: string): Pair {
    const parts = key.split(",").map(Number);
    if (parts.length !== 2 || parts.some(isNaN)) {
        throw new Error(`not an arc key: ${key}`);
    }
    return [parts[0], parts[1]];
}
