/**
 * Measurement console: the reader picks a sentence and a hypothesis, the
 * service collapses the state, and a scrubber drives Schrödinger evolution
 * between readings.  One command is in flight at a time; later clicks queue.
 */

import { ApiClient, ApiError } from './api.js'
import type { MeasureMode, SessionState, SystemSummary } from './api.js'
import {
  DEFAULT_GEOMETRY,
  amplitudeList,
  historyLines,
  sentenceBars,
  seriesChart,
  windowHint,
} from './view.js'

const DOUBLE_LIAR = '(1) sentence (2) is false\n(2) sentence (1) is true\n'

declare global {
  interface Window {
    LIARSIM_API?: string
  }
}

const api = new ApiClient(window.LIARSIM_API ?? '')

interface ConsoleState {
  systemId: string
  summary: SystemSummary
  sessionId: string
  state: SessionState
  simTime: number
  chartSentence: number
  disabled: Set<string>
  sourceLines: string[]
}

let current: ConsoleState | null = null
let queue: Promise<void> = Promise.resolve()

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: Array<Node | string>
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag)
  for (const [key, value] of Object.entries(attrs)) {
    if (key === 'class') node.className = value
    else node.setAttribute(key, value)
  }
  node.append(...children)
  return node
}

function notice(text: string, kind: 'info' | 'error' = 'info'): void {
  const host = document.getElementById('notices')!
  const item = el('div', { class: `notice ${kind}` }, text)
  host.prepend(item)
  setTimeout(() => item.remove(), 6000)
}

/** Serialize commands: the console never has two requests in flight. */
function enqueue(task: () => Promise<void>): void {
  queue = queue.then(task).catch((err) => {
    if (err instanceof ApiError) notice(`${err.status}: ${err.message}`, 'error')
    else notice(String(err), 'error')
  })
}

// ---------------------------------------------------------------------------
// Setup panel

function renderSetup(): void {
  const root = document.getElementById('app')!
  root.replaceChildren()
  const source = el('textarea', { rows: '6', spellcheck: 'false' }) as HTMLTextAreaElement
  source.value = DOUBLE_LIAR
  const name = el('input', { value: 'double-liar' }) as HTMLInputElement
  const seed = el('input', { value: '11', type: 'number' }) as HTMLInputElement
  const button = el('button', { class: 'primary' }, 'Compile and open a session')

  button.addEventListener('click', () => {
    enqueue(async () => {
      const system = await api.createSystem(name.value, source.value)
      if (system.summary.kind !== 'paradoxical') {
        notice('system is consistent: nothing oscillates; add an odd number of denials', 'error')
        return
      }
      const session = await api.createSession(system.system_id, Number(seed.value))
      current = {
        systemId: system.system_id,
        summary: system.summary,
        sessionId: session.session_id,
        state: session.state,
        simTime: 0,
        chartSentence: 1,
        disabled: new Set(),
        sourceLines: source.value.split('\n').filter((line) => line.trim().length > 0),
      }
      renderConsole()
    })
  })

  root.append(
    el('section', { class: 'panel' },
      el('h2', {}, 'Sentence system'),
      el('p', { class: 'hint' },
        'One line per sentence: (k) sentence (j) is true|false. ',
        'An odd number of denials around the cycle makes it a paradox.'),
      source,
      el('div', { class: 'row' },
        el('label', {}, 'name ', name),
        el('label', {}, 'seed ', seed),
        button),
    ),
  )
}

// ---------------------------------------------------------------------------
// Console

function hypothesisKey(sentence: number, mode: MeasureMode): string {
  return `${sentence}:${mode}`
}

function renderConsole(): void {
  const root = document.getElementById('app')!
  root.replaceChildren(
    el('section', { class: 'panel', id: 'cards' }),
    el('section', { class: 'panel' },
      el('h2', {}, 'Evolution'),
      el('div', { id: 'scrubber' }),
    ),
    el('section', { class: 'panel' },
      el('h2', {}, 'Oscillation'),
      el('div', { id: 'chart' }),
    ),
    el('section', { class: 'panel two-col' },
      el('div', {},
        el('h2', {}, 'Largest amplitudes'),
        el('div', { id: 'amplitudes' })),
      el('div', {},
        el('h2', {}, 'History'),
        el('ol', { id: 'history' })),
    ),
  )
  renderCards()
  renderScrubber()
  renderAmplitudes()
  refreshChart()
  refreshHistory()
}

function renderCards(): void {
  if (!current) return
  const host = document.getElementById('cards')
  if (!host) return
  host.replaceChildren(el('h2', {}, `${current.summary.name}: sim time ${current.simTime.toFixed(4)}`))
  const bars = sentenceBars(current.state)
  for (const bar of bars) {
    const text = current.sourceLines[bar.sentence - 1] ?? `sentence (${bar.sentence})`
    const actions = el('div', { class: 'row' })
    const buttons: Array<[string, MeasureMode]> = [
      ['read (sample)', 'sample'],
      ['assume true', 'hypothesize_true'],
      ['assume false', 'hypothesize_false'],
    ]
    for (const [label, mode] of buttons) {
      const button = el('button', {}, label)
      const key = hypothesisKey(bar.sentence, mode)
      if (current.disabled.has(key)) {
        button.setAttribute('disabled', 'disabled')
        button.setAttribute('title', 'the current state assigns this reading zero weight')
      }
      button.addEventListener('click', () => act(bar.sentence, mode))
      actions.append(button)
    }
    host.append(
      el('article', { class: `card verdict-${bar.verdict}` },
        el('header', {},
          el('strong', {}, text),
          el('span', { class: 'verdict' }, bar.verdict)),
        el('div', { class: 'bar' },
          el('span', {
            class: 'seg true', style: `width:${bar.trueWidthPct}%`,
            title: `p_true = ${bar.pTrue}`,
          }),
          el('span', {
            class: 'seg false', style: `width:${bar.falseWidthPct}%`,
            title: `p_false = ${bar.pFalse}`,
          }),
          el('span', {
            class: 'seg latent', style: `width:${bar.latentWidthPct}%`,
            title: `p_latent = ${bar.pLatent}`,
          })),
        el('div', { class: 'weights' },
          `true ${bar.pTrue.toFixed(4)} · false ${bar.pFalse.toFixed(4)} · latent ${bar.pLatent.toFixed(4)}`),
        actions,
      ),
    )
  }
  const reset = el('button', { class: 'ghost' }, 'reset to unmeasured state')
  reset.addEventListener('click', () => {
    enqueue(async () => {
      if (!current) return
      const response = await api.reset(current.sessionId)
      current.state = response.state
      current.simTime = response.sim_time
      current.disabled.clear()
      renderCards()
      renderAmplitudes()
      refreshChart()
      refreshHistory()
    })
  })
  host.append(reset)
}

function act(sentence: number, mode: MeasureMode): void {
  enqueue(async () => {
    if (!current) return
    try {
      const response = await api.measure(current.sessionId, sentence, mode)
      current.state = response.state
      current.simTime = response.sim_time
      current.disabled.clear()
      notice(
        `sentence ${response.outcome.sentence} -> ${response.outcome.value} ` +
          `(probability ${response.outcome.probability.toFixed(4)})`,
      )
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        current.disabled.add(hypothesisKey(sentence, mode))
        notice(err.message, 'error')
      } else {
        throw err
      }
    }
    renderCards()
    renderAmplitudes()
    refreshChart()
    refreshHistory()
  })
}

function renderScrubber(): void {
  const host = document.getElementById('scrubber')
  if (!host || !current) return
  const slider = el('input', {
    type: 'range', min: '0', max: String(Math.PI), step: String(Math.PI / 16), value: '0',
  }) as HTMLInputElement
  const readout = el('span', { class: 'hint' }, 'dt = 0')
  slider.addEventListener('input', () => {
    readout.textContent = `dt = ${Number(slider.value).toFixed(4)}`
  })
  const apply = el('button', {}, 'advance')
  apply.addEventListener('click', () => evolveBy(Number(slider.value)))
  const step = el('button', {}, 'one reading step (π/2)')
  step.addEventListener('click', () => evolveBy(Math.PI / 2))
  host.replaceChildren(slider, readout, apply, step)
}

function evolveBy(dt: number): void {
  if (dt <= 0) return
  enqueue(async () => {
    if (!current) return
    const response = await api.evolve(current.sessionId, dt)
    current.state = response.state
    current.simTime = response.sim_time
    current.disabled.clear()
    renderCards()
    renderAmplitudes()
    refreshChart()
    refreshHistory()
  })
}

function renderAmplitudes(): void {
  const host = document.getElementById('amplitudes')
  if (!host || !current) return
  host.replaceChildren()
  for (const amp of amplitudeList(current.state)) {
    host.append(
      el('div', { class: 'amp-row', title: amp.detail },
        el('span', {
          class: 'amp-bar',
          style: `width:${amp.lengthPct * 0.6}%; background:hsl(${amp.hueDeg},70%,55%)`,
        }),
        el('span', { class: 'amp-label' }, `${amp.label}  |a|=${amp.magnitude.toFixed(4)}`),
      ),
    )
  }
}

function refreshChart(): void {
  enqueue(async () => {
    if (!current) return
    const host = document.getElementById('chart')
    if (!host) return
    const from = 0
    const to = current.simTime + 2 * Math.PI
    const hint = windowHint(from, to)
    if (hint) {
      host.replaceChildren(el('p', { class: 'hint' }, hint))
      return
    }
    const sentence = current.chartSentence
    const series = await api.series(current.sessionId, sentence, from, to, 96)
    const chart = seriesChart(series, current.simTime)
    const g = DEFAULT_GEOMETRY
    const svgNS = 'http://www.w3.org/2000/svg'
    const svg = document.createElementNS(svgNS, 'svg')
    svg.setAttribute('viewBox', `0 0 ${g.width} ${g.height}`)
    svg.setAttribute('class', 'series')
    const paths: Array<[string, string]> = [
      [chart.truePath, 'curve-true'],
      [chart.falsePath, 'curve-false'],
      [chart.latentPath, 'curve-latent'],
    ]
    for (const [d, cls] of paths) {
      const path = document.createElementNS(svgNS, 'path')
      path.setAttribute('d', d)
      path.setAttribute('class', cls)
      svg.append(path)
    }
    if (chart.markerX !== null) {
      const marker = document.createElementNS(svgNS, 'line')
      marker.setAttribute('x1', String(chart.markerX))
      marker.setAttribute('x2', String(chart.markerX))
      marker.setAttribute('y1', String(g.padY))
      marker.setAttribute('y2', String(g.height - g.padY))
      marker.setAttribute('class', 'marker')
      svg.append(marker)
    }

    const selector = el('div', { class: 'row' })
    for (let k = 1; k <= current.summary.n; k += 1) {
      const button = el('button', { class: k === sentence ? 'primary' : '' }, `sentence ${k}`)
      button.addEventListener('click', () => {
        if (!current) return
        current.chartSentence = k
        refreshChart()
      })
      selector.append(button)
    }
    host.replaceChildren(
      selector,
      svg,
      el('p', { class: 'hint legend' },
        el('span', { class: 'swatch true' }), ' p_true  ',
        el('span', { class: 'swatch false' }), ' p_false  ',
        el('span', { class: 'swatch latent' }), ' p_latent; marker = current sim time'),
    )
  })
}

function refreshHistory(): void {
  enqueue(async () => {
    if (!current) return
    const host = document.getElementById('history')
    if (!host) return
    const { events } = await api.history(current.sessionId)
    host.replaceChildren(...historyLines(events).map((line) => el('li', {}, line)))
  })
}

renderSetup()
