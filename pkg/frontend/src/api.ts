/**
 * Typed client for the liarsim session API.
 *
 * Every number rendered by the console comes verbatim from these response
 * payloads; the client never recomputes quantum state.
 */

export interface SentenceProbabilities {
  sentence: number
  p_true: number
  p_false: number
  p_latent: number
}

export interface AmplitudeEntry {
  index: number
  label: string
  re: number
  im: number
  magnitude: number
  phase: number
}

export interface SessionState {
  probabilities: SentenceProbabilities[]
  top_amplitudes: AmplitudeEntry[]
}

export interface OrbitSummary {
  kind: string
  length: number
}

export interface SystemSummary {
  name: string
  n: number
  dim: number
  kind: string
  cycle_length: number
  cycle_states: number[]
  orbits: OrbitSummary[]
}

export interface SystemCreated {
  system_id: string
  summary: SystemSummary
}

export interface SessionCreated {
  session_id: string
  state: SessionState
}

export interface SessionView {
  state: SessionState
  sim_time: number
}

export interface MeasureOutcome {
  sentence: number
  value: 'true' | 'false' | 'latent'
  probability: number
}

export interface MeasureResponse {
  outcome: MeasureOutcome
  state: SessionState
  sim_time: number
}

export interface EvolveResponse {
  state: SessionState
  sim_time: number
}

export interface SeriesResponse {
  times: number[]
  p_true: number[]
  p_false: number[]
  p_latent: number[]
}

export interface HistoryEvent {
  sim_time: number
  action: string
  sentence: number | null
  value: string | null
  dt: number | null
  probability: number | null
}

export type MeasureMode = 'sample' | 'hypothesize_true' | 'hypothesize_false'

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail)
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  })
  if (!response.ok) {
    let detail = response.statusText
    try {
      const body = await response.json()
      detail = typeof body.detail === 'string' ? body.detail : JSON.stringify(body.detail)
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail)
  }
  return (await response.json()) as T
}

export class ApiClient {
  constructor(readonly base: string = '') {}

  createSystem(name: string, source: string): Promise<SystemCreated> {
    return request(`${this.base}/api/systems`, {
      method: 'POST',
      body: JSON.stringify({ name, source }),
    })
  }

  createSession(systemId: string, seed: number): Promise<SessionCreated> {
    return request(`${this.base}/api/systems/${systemId}/sessions`, {
      method: 'POST',
      body: JSON.stringify({ seed }),
    })
  }

  getSession(sessionId: string): Promise<SessionView> {
    return request(`${this.base}/api/sessions/${sessionId}`)
  }

  measure(sessionId: string, sentence: number, mode: MeasureMode): Promise<MeasureResponse> {
    return request(`${this.base}/api/sessions/${sessionId}/measure`, {
      method: 'POST',
      body: JSON.stringify({ sentence, mode }),
    })
  }

  evolve(sessionId: string, dt: number): Promise<EvolveResponse> {
    return request(`${this.base}/api/sessions/${sessionId}/evolve`, {
      method: 'POST',
      body: JSON.stringify({ dt }),
    })
  }

  reset(sessionId: string): Promise<EvolveResponse> {
    return request(`${this.base}/api/sessions/${sessionId}/reset`, { method: 'POST' })
  }

  series(
    sessionId: string,
    sentence: number,
    from: number,
    to: number,
    steps: number,
  ): Promise<SeriesResponse> {
    const params = new URLSearchParams({
      sentence: String(sentence),
      from: String(from),
      to: String(to),
      steps: String(steps),
    })
    return request(`${this.base}/api/sessions/${sessionId}/series?${params}`)
  }

  history(sessionId: string): Promise<{ events: HistoryEvent[] }> {
    return request(`${this.base}/api/sessions/${sessionId}/history`)
  }
}
